// Deforms the 96-dim bosonization of M_(1,6) over D_12 and prints a few products.

#include <iostream>

#include "pointed/pointed.hpp"

using namespace pointed;

int main() {
    auto G = dihedral(12);
    auto A = bosonize(build_truncated(module_M_ik(G, 1, 6)));
    std::cout << "dim A = " << A->dim() << "\n";

    DihedralForm f(A->nichols().module_ptr());
    Scalar alpha(Rational(1, 2));
    f.alpha(0, 1, 0, 1, alpha);
    f.alpha(0, 2, 0, 2, alpha);
    std::cout << "eta = " << f.form().to_string() << "\n";
    std::cout << "invariant: " << (check_invariance(f.form()).pass ? "yes" : "no") << "\n";

    auto D = deform(A, f.form());
    int a1 = A->generator(0), a2 = A->generator(1);
    std::cout << "a1 a1 in A       : " << A->format(A->product(a1, a1)) << "\n";
    std::cout << "a1 a1 in A_sigma : " << D->format(D->product(a1, a1)) << "\n";
    std::cout << "a1 a2 in A_sigma : " << D->format(D->product(a1, a2)) << "\n";
    std::cout << "S_sigma(a1)      : " << D->format(D->antipode(a1)) << "\n";

    auto rep = verify_hopf_axioms(*D);
    for (const auto& r : rep.axioms) std::cout << r.name << ": " << (r.pass ? "ok" : "FAIL") << " (" << r.checked << ")\n";
    return rep.all_pass() ? 0 : 1;
}
