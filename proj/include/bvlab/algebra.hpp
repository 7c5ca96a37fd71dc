#pragma once

#include "bvlab/errors.hpp"
#include "bvlab/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bvlab {

// ---------------------------------------------------------------------------
// Variable tables
// ---------------------------------------------------------------------------
//
// A model lives over a free graded-commutative algebra on a finite generator
// list. Each generator carries a ghost number; its parity is ghost mod 2.
// Three kinds of generators exist:
//
//   Field      a coordinate on the graded space (may carry a form-degree tag
//              used by the superfield bookkeeping of lattice models),
//   Parameter  an even bookkeeping constant (hbar, the imaginary unit, the
//              equivariant parameter u); parameters may carry a square
//              relation such as i^2 = -1,
//   Delta      the one-form generator attached to a field v; it has the
//              opposite parity of v and the same ghost number.  Delta
//              generators exist only after enable_deltas() has been called.
//
// Every table starts with the three reserved parameters hbar (ghost 0),
// i (ghost 0, i^2 = -1) and u (ghost 2).

enum class VarKind { Field, Parameter, Delta };

struct VarInfo {
    std::string name;
    int ghost = 0;
    int formdeg = 0;  // form degree tag for lattice superfield components
    VarKind kind = VarKind::Field;
    int delta_of = -1;            // for Delta: id of the underlying field
    int delta_id = -1;            // for Field: id of its delta generator, or -1
    std::optional<Rat> square;    // parameter relation v^2 = square
    bool odd = false;             // parity: ghost mod 2
};

class VariableTable {
public:
    VariableTable();

    int add_field(std::string name, int ghost, int formdeg = 0);
    int add_parameter(std::string name, int ghost, std::optional<Rat> square = {});

    // Appends a delta generator for every field declared so far.  Must be
    // called at most once, after all fields are declared.
    void enable_deltas();

    bool has(std::string_view name) const;
    int id(std::string_view name) const;  // throws StructureError if unknown
    const VarInfo& info(int id) const { return vars_.at(static_cast<size_t>(id)); }
    int size() const { return static_cast<int>(vars_.size()); }
    bool deltas_enabled() const { return deltas_enabled_; }

    // Reserved parameter ids, present in every table.
    int hbar() const { return hbar_; }
    int imag() const { return imag_; }
    int equiv_u() const { return u_; }

    std::vector<int> field_ids() const;  // fields only, declaration order

private:
    std::vector<VarInfo> vars_;
    std::map<std::string, int, std::less<>> index_;
    bool deltas_enabled_ = false;
    int hbar_ = -1, imag_ = -1, u_ = -1;

    int push(VarInfo v);
};

using TablePtr = std::shared_ptr<const VariableTable>;

// ---------------------------------------------------------------------------
// Monomials and polynomials
// ---------------------------------------------------------------------------

// A monomial is a product of generators in ascending id order (the canonical
// word). Odd generators appear with exponent 1 at most; squares of relation
// parameters are reduced away during multiplication.
struct Monomial {
    std::vector<std::pair<int, int>> factors;  // (var id, exponent>0), ids ascending

    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;

    int exponent(int var) const;
    bool contains(int var) const { return exponent(var) > 0; }
    bool empty() const { return factors.empty(); }
};

class GradedPoly {
public:
    GradedPoly() = default;
    explicit GradedPoly(TablePtr tbl) : tbl_(std::move(tbl)) {}

    static GradedPoly zero(TablePtr tbl) { return GradedPoly(std::move(tbl)); }
    static GradedPoly constant(TablePtr tbl, const Rat& c);
    static GradedPoly variable(TablePtr tbl, int var);
    static GradedPoly variable(TablePtr tbl, std::string_view name);

    const TablePtr& table() const { return tbl_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    GradedPoly operator-() const;
    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }
    GradedPoly operator*(const Rat& c) const;
    friend GradedPoly operator*(const Rat& c, const GradedPoly& p) { return p * c; }
    bool operator==(const GradedPoly& o) const;

    GradedPoly pow(int e) const;

    // Graded left derivative with respect to a generator.
    GradedPoly left_derivative(int var) const;

    // Homogeneity queries. ghost_number()/parity() throw GradingError when the
    // polynomial is not homogeneous (zero is homogeneous of any degree).
    bool is_ghost_homogeneous() const;
    int ghost_number() const;
    bool is_parity_homogeneous() const;
    int parity() const;  // 0 even, 1 odd

    // Degree in the delta generators (throws if mixed).
    int delta_degree() const;

    // Largest exponent of `var` occurring in any term (0 for none).
    int max_power(int var) const;

    // Substitution of polynomials for field/delta generators. Every image
    // must match the parity of the variable it replaces (or be zero).
    GradedPoly substitute(const std::map<int, GradedPoly>& images) const;

    // Sum of the terms with exponent of `var` equal to k, with that factor
    // removed. The variable must be even (no sign bookkeeping needed).
    GradedPoly coefficient_of_power(int var, int k) const;

    // Drops every term whose exponent of `var` exceeds `max`.
    GradedPoly truncate_power(int var, int max) const;

    std::string render() const;  // canonical, deterministic

    // term ingestion used by builders; normalizes nothing (the monomial must
    // already be canonical), merely accumulates.
    void add_term(const Monomial& m, const Rat& c);

private:
    TablePtr tbl_;
    std::map<Monomial, Rat> terms_;

    void check_same_table(const GradedPoly& o) const;
};

// Multiplies two canonical monomials over `tbl`. Returns false if the product
// vanishes (shared odd generator); otherwise fills out/sign-adjusted coeff.
bool multiply_monomials(const VariableTable& tbl, const Monomial& a, const Monomial& b,
                        Monomial& out, Rat& coeff);

int monomial_parity(const VariableTable& tbl, const Monomial& m);
int monomial_ghost(const VariableTable& tbl, const Monomial& m);

}  // namespace bvlab
