#pragma once

#include "a1mod/modcat/fp_module.hpp"

namespace a1mod::modcat {

// Extension of scalars along phi: substitutes every source variable in the
// presentation by its image. Models derived extension at H0.
FpModule base_change(const FpModule& m, const RingMap& phi);

// Coefficient extension along ℚ -> ℚ[t]: same presentation, one more variable.
FpModule structure_i(const FpModule& v, const std::string& var = "t");

// M (x) N with the two actions kept separate: presentation
// [A(t1) (x) I | I (x) B(t2)] over ℚ[t1,t2] on g_M * g_N generators.
FpModule external_product(const FpModule& m, const FpModule& n,
                          const std::string& var1 = "t1", const std::string& var2 = "t2");

// Extension of scalars along t1, t2 -> t (coequalizes the two actions).
FpModule plus_shriek(const FpModule& p, const std::string& var = "t");

// The one-variable tensor: plus_shriek(external_product(m, n)), over m's ring.
FpModule tensor_a1(const FpModule& m, const FpModule& n);

// Brute-force route on underlying data: coker(T (x) I - I (x) S) with the
// endomorphism induced by T (x) I.
EndoPair tensor_coeq(const EndoPair& m, const EndoPair& n);

// Evaluation at the witness: substitutes t -> alpha. Result over w.target_vars.
FpModule ev_alpha(const FpModule& m, const TypeWitness& w);

// Same value assembled through the external-product presentation
// [A(u) | (u - alpha) I] with the auxiliary variable then eliminated at alpha.
FpModule ev_alpha_boxed(const FpModule& m, const TypeWitness& w);

// Colimit of the one-object diagram: coker(T - I), an f.p. module over ℚ.
FpModule ev_one_via_colimit(const EndoPair& m);

// Restriction of scalars along the merge map: [A(t1) | (t1 - t2) I_g].
FpModule restrict_plus(const FpModule& m, const std::string& var1 = "t1",
                       const std::string& var2 = "t2");

// Intertwiner space {X : X T_m = T_n X} with the endomorphism given by
// post-composition with T_n.
EndoPair hom_fp(const EndoPair& m, const EndoPair& n);

// Invariant-factor + free-rank equality; both modules over the same ring with
// at most one variable.
bool iso_test(const FpModule& m, const FpModule& n);

}  // namespace a1mod::modcat
