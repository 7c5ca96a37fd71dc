#include "bvlab/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace bvlab {

// ---------------------------------------------------------------------------
// VariableTable
// ---------------------------------------------------------------------------

VariableTable::VariableTable() {
    hbar_ = add_parameter("hbar", 0);
    imag_ = add_parameter("i", 0, Rat(-1));
    u_ = add_parameter("u", 2);
}

int VariableTable::push(VarInfo v) {
    if (index_.count(v.name))
        throw StructureError("duplicate variable name: " + v.name);
    v.odd = ((v.ghost % 2) + 2) % 2 == 1;
    int id = static_cast<int>(vars_.size());
    index_.emplace(v.name, id);
    vars_.push_back(std::move(v));
    return id;
}

int VariableTable::add_field(std::string name, int ghost, int formdeg) {
    if (deltas_enabled_)
        throw StructureError("cannot add fields after enable_deltas()");
    VarInfo v;
    v.name = std::move(name);
    v.ghost = ghost;
    v.formdeg = formdeg;
    v.kind = VarKind::Field;
    return push(std::move(v));
}

int VariableTable::add_parameter(std::string name, int ghost, std::optional<Rat> square) {
    if (ghost % 2 != 0)
        throw GradingError("parameters must have even ghost number: " + name);
    VarInfo v;
    v.name = std::move(name);
    v.ghost = ghost;
    v.kind = VarKind::Parameter;
    v.square = std::move(square);
    return push(std::move(v));
}

void VariableTable::enable_deltas() {
    if (deltas_enabled_)
        throw StructureError("enable_deltas() called twice");
    deltas_enabled_ = true;
    int n = static_cast<int>(vars_.size());
    for (int id = 0; id < n; ++id) {
        if (vars_[static_cast<size_t>(id)].kind != VarKind::Field) continue;
        VarInfo d;
        d.name = "d(" + vars_[static_cast<size_t>(id)].name + ")";
        d.ghost = vars_[static_cast<size_t>(id)].ghost;
        d.formdeg = vars_[static_cast<size_t>(id)].formdeg;
        d.kind = VarKind::Delta;
        d.delta_of = id;
        int did = push(std::move(d));
        // delta generators flip parity: ghost stays, parity is opposite
        vars_[static_cast<size_t>(did)].odd = !vars_[static_cast<size_t>(id)].odd;
        vars_[static_cast<size_t>(id)].delta_id = did;
    }
}

bool VariableTable::has(std::string_view name) const {
    return index_.find(name) != index_.end();
}

int VariableTable::id(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw StructureError("unknown variable: " + std::string(name));
    return it->second;
}

std::vector<int> VariableTable::field_ids() const {
    std::vector<int> out;
    for (int id = 0; id < size(); ++id)
        if (info(id).kind == VarKind::Field) out.push_back(id);
    return out;
}

// ---------------------------------------------------------------------------
// Monomial helpers
// ---------------------------------------------------------------------------

int Monomial::exponent(int var) const {
    for (const auto& [v, e] : factors)
        if (v == var) return e;
    return 0;
}

int monomial_parity(const VariableTable& tbl, const Monomial& m) {
    int p = 0;
    for (const auto& [v, e] : m.factors)
        if (tbl.info(v).odd) p += e;
    return p & 1;
}

int monomial_ghost(const VariableTable& tbl, const Monomial& m) {
    int g = 0;
    for (const auto& [v, e] : m.factors) g += tbl.info(v).ghost * e;
    return g;
}

// Koszul sign of concatenating two canonical words and resorting: one factor
// of (-1) for every pair of odd generators (a in `a`, b in `b`) with
// id(a) > id(b). Shared odd generators annihilate the product; squares of
// relation parameters are reduced into the coefficient.
bool multiply_monomials(const VariableTable& tbl, const Monomial& a, const Monomial& b,
                        Monomial& out, Rat& coeff) {
    coeff = 1;
    // count odd inversions
    int inversions = 0;
    int odd_seen_in_b = 0;
    {
        // iterate a ascending; for each odd generator of a count odd
        // generators of b with smaller id. Two-pointer sweep.
        size_t jb = 0;
        int odd_prefix_b = 0;  // odd generators of b with id < current a id
        for (const auto& [va, ea] : a.factors) {
            if (!tbl.info(va).odd) continue;
            while (jb < b.factors.size() && b.factors[jb].first < va) {
                if (tbl.info(b.factors[jb].first).odd) ++odd_prefix_b;
                ++jb;
            }
            inversions += odd_prefix_b;
        }
        (void)odd_seen_in_b;
    }
    if (inversions & 1) coeff = -coeff;

    // merge factor lists
    out.factors.clear();
    out.factors.reserve(a.factors.size() + b.factors.size());
    size_t ia = 0, ib = 0;
    while (ia < a.factors.size() || ib < b.factors.size()) {
        bool take_a = ib == b.factors.size() ||
                      (ia < a.factors.size() && a.factors[ia].first < b.factors[ib].first);
        bool take_both = ia < a.factors.size() && ib < b.factors.size() &&
                         a.factors[ia].first == b.factors[ib].first;
        int var, exp;
        if (take_both) {
            var = a.factors[ia].first;
            exp = a.factors[ia].second + b.factors[ib].second;
            ++ia, ++ib;
        } else if (take_a) {
            var = a.factors[ia].first;
            exp = a.factors[ia].second;
            ++ia;
        } else {
            var = b.factors[ib].first;
            exp = b.factors[ib].second;
            ++ib;
        }
        const VarInfo& vi = tbl.info(var);
        if (vi.odd && exp > 1) return false;  // nilpotent
        if (vi.square && exp >= 2) {
            // reduce v^(2m+r) = square^m v^r
            int halves = exp / 2;
            for (int k = 0; k < halves; ++k) coeff *= *vi.square;
            exp %= 2;
            if (exp == 0) continue;
        }
        out.factors.emplace_back(var, exp);
    }
    return true;
}

// ---------------------------------------------------------------------------
// GradedPoly
// ---------------------------------------------------------------------------

void GradedPoly::check_same_table(const GradedPoly& o) const {
    if (tbl_ && o.tbl_ && tbl_ != o.tbl_)
        throw StructureError("operands belong to different variable tables");
}

GradedPoly GradedPoly::constant(TablePtr tbl, const Rat& c) {
    GradedPoly p(std::move(tbl));
    if (c != 0) p.terms_[Monomial{}] = c;
    return p;
}

GradedPoly GradedPoly::variable(TablePtr tbl, int var) {
    GradedPoly p(std::move(tbl));
    Monomial m;
    m.factors.emplace_back(var, 1);
    p.terms_[m] = 1;
    return p;
}

GradedPoly GradedPoly::variable(TablePtr tbl, std::string_view name) {
    int id = tbl->id(name);
    return variable(std::move(tbl), id);
}

void GradedPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly r(tbl_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    check_same_table(o);
    if (!tbl_) tbl_ = o.tbl_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
    check_same_table(o);
    if (!tbl_) tbl_ = o.tbl_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    GradedPoly r = *this;
    r += o;
    return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
    GradedPoly r = *this;
    r -= o;
    return r;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    check_same_table(o);
    GradedPoly r(tbl_ ? tbl_ : o.tbl_);
    if (!r.tbl_) throw StructureError("polynomial product without a variable table");
    const VariableTable& t = *r.tbl_;
    Monomial prod;
    Rat sign;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            if (!multiply_monomials(t, ma, mb, prod, sign)) continue;
            r.add_term(prod, ca * cb * sign);
        }
    return r;
}

GradedPoly GradedPoly::operator*(const Rat& c) const {
    GradedPoly r(tbl_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

bool GradedPoly::operator==(const GradedPoly& o) const {
    return terms_ == o.terms_;
}

GradedPoly GradedPoly::pow(int e) const {
    if (e < 0) throw StructureError("negative power");
    GradedPoly r = constant(tbl_, 1);
    for (int k = 0; k < e; ++k) r *= *this;
    return r;
}

GradedPoly GradedPoly::left_derivative(int var) const {
    if (!tbl_) throw StructureError("derivative of table-less polynomial");
    const VarInfo& vi = tbl_->info(var);
    if (vi.square)
        throw StructureError("derivative with respect to a relation parameter: " + vi.name);
    GradedPoly r(tbl_);
    for (const auto& [m, c] : terms_) {
        int prefix_parity = 0;
        for (size_t j = 0; j < m.factors.size(); ++j) {
            auto [v, e] = m.factors[j];
            if (v < var) {
                if (tbl_->info(v).odd) prefix_parity ^= (e & 1);
                continue;
            }
            if (v > var) break;
            // found the variable: remove one power, sign from jumping prefix
            Monomial out = m;
            if (e == 1)
                out.factors.erase(out.factors.begin() + static_cast<long>(j));
            else
                out.factors[j].second = e - 1;
            Rat coeff = c * e;
            if (vi.odd && prefix_parity) coeff = -coeff;
            r.add_term(out, coeff);
            break;
        }
    }
    return r;
}

bool GradedPoly::is_ghost_homogeneous() const {
    if (terms_.empty()) return true;
    int g = monomial_ghost(*tbl_, terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (monomial_ghost(*tbl_, m) != g) return false;
    return true;
}

int GradedPoly::ghost_number() const {
    if (terms_.empty()) return 0;
    if (!is_ghost_homogeneous())
        throw GradingError("polynomial is not ghost-homogeneous: " + render());
    return monomial_ghost(*tbl_, terms_.begin()->first);
}

bool GradedPoly::is_parity_homogeneous() const {
    if (terms_.empty()) return true;
    int p = monomial_parity(*tbl_, terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (monomial_parity(*tbl_, m) != p) return false;
    return true;
}

int GradedPoly::parity() const {
    if (terms_.empty()) return 0;
    if (!is_parity_homogeneous())
        throw GradingError("polynomial is not parity-homogeneous: " + render());
    return monomial_parity(*tbl_, terms_.begin()->first);
}

int GradedPoly::delta_degree() const {
    if (terms_.empty()) return 0;
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (const auto& [v, e] : m.factors)
            if (tbl_->info(v).kind == VarKind::Delta) d += e;
        if (deg == -1) deg = d;
        else if (deg != d)
            throw GradingError("polynomial mixes form degrees: " + render());
    }
    return deg;
}

int GradedPoly::max_power(int var) const {
    int best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, m.exponent(var));
    return best;
}

GradedPoly GradedPoly::substitute(const std::map<int, GradedPoly>& images) const {
    if (!tbl_) return *this;
    for (const auto& [v, img] : images) {
        const VarInfo& vi = tbl_->info(v);
        if (vi.kind == VarKind::Parameter)
            throw StructureError("cannot substitute a parameter: " + vi.name);
        if (!img.is_zero() && img.parity() != (vi.odd ? 1 : 0))
            throw GradingError("substitution image for " + vi.name +
                               " has the wrong parity");
    }
    GradedPoly r(tbl_);
    for (const auto& [m, c] : terms_) {
        GradedPoly term = constant(tbl_, c);
        for (const auto& [v, e] : m.factors) {
            auto it = images.find(v);
            if (it == images.end()) {
                term *= variable(tbl_, v).pow(e);
            } else {
                term *= it->second.pow(e);
            }
            if (term.is_zero()) break;
        }
        r += term;
    }
    return r;
}

GradedPoly GradedPoly::coefficient_of_power(int var, int k) const {
    if (tbl_->info(var).odd && k > 1)
        throw StructureError("odd variable has no power " + std::to_string(k));
    GradedPoly r(tbl_);
    for (const auto& [m, c] : terms_) {
        if (m.exponent(var) != k) continue;
        Monomial out;
        for (const auto& f : m.factors)
            if (f.first != var) out.factors.push_back(f);
        // only even variables are extracted this way, so no sign arises
        if (k > 0 && tbl_->info(var).odd)
            throw StructureError("coefficient extraction needs an even variable");
        r.add_term(out, c);
    }
    return r;
}

GradedPoly GradedPoly::truncate_power(int var, int max) const {
    GradedPoly r(tbl_);
    for (const auto& [m, c] : terms_)
        if (m.exponent(var) <= max) r.add_term(m, c);
    return r;
}

std::string GradedPoly::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed = false;
        if (a != 1 || m.factors.empty()) {
            os << to_string(a);
            printed = true;
        }
        for (const auto& [v, e] : m.factors) {
            if (printed) os << "*";
            os << tbl_->info(v).name;
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

}  // namespace bvlab
