#include "bvlab/conventions.hpp"

namespace bvlab {

std::string conventions_text() {
    return R"(frozen conventions
==================

grading
  parity(v)            = ghost(v) mod 2; the form-degree tag is bookkeeping only
  pairing grading      gh(base) + gh(momentum) = k - 1;  gh(omega) = k - 1
  reserved parameters  hbar (ghost 0), i (ghost 0, i^2 = -1), u (ghost 2)

bracket and Laplacian
  one-forms            d(f) = sum_v  dL f/dv  d(v)     (left derivatives)
  Hamiltonian field    iota_{X_f} omega = d(f)
  bracket              (f, g) = (-1)^{|f|} X_f(g)
  Laplacian            Lap f  = sum_i c_i^{-1} dL/db_i dL/dm_i f
  obstruction          T      = 1/2 (S, S) - i hbar Lap S
  odd actions          for odd S the even-bracket form flips sign against the
                       Lie form: 1/2 (S, S) = -1/2 L_{X_S} S
  exactness weights    on the u^j coefficient the Euler weight of a ghost-k+1
                       one-form is k + 1 - 2j

surface model (segmented circle sweep)
  slot families        c0..cK (gh 1), At0..At{K-1} (gh 0), Af0..AfK (gh 0, fd 1),
                       Bp0..Bp{K-1} (gh -1, fd 2); duals B, Apt, Apf, cp
  pairing coefficients (c, cp) +1   (At, Apf) +1   (Af, Apt) -1   (Bp, B) +1
  end-trace signs      near block +1, far block -1, dual end block +1,
                       far-end weight -1
  sweep insertion      the Lie contraction flips the sign of the middle slot

end polarization
  position slots       q_c (gh 1), q_Af (gh 0, fd 1) near; q_B (gh 0),
                       q_Apf (gh -1, fd 1) far
  far-end coupling     f = - B_far * Af_K - Apf_far * c_K
  lift of positions    q_Af -> i n q_c,  q_Apf -> - i n q_B; with the
                       equivariant term additionally q_c -> u q_Af,
                       q_B -> u q_Apf
  end operator         Omega = sum_q  i hbar (lift q) d/dq, standard ordered
  end obstruction      Omega^2 = -hbar^2 u i n q d/dq  (near end)
                               = +hbar^2 u i n q d/dq  (far end)
  effective action     S_eff = c_near * Apf_far - Af_near * B_far, u-free at
                       every order on the temporal-gauge locus
)";
}

}  // namespace bvlab
