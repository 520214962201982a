// Walks through a few identities by hand with the library API.
#include <iostream>

#include "chikit/chikit.hpp"

using namespace chikit;

int main() {
  // chi_2 and the (1,1) shuffle relation
  RatFunc c12 = chi(2, {x_var(1), x_var(2)}).value, c21 = chi(2, {x_var(2), x_var(1)}).value;
  RatFunc prod = chi(1, {x_var(1)}).value * chi(1, {x_var(2)}).value;
  std::cout << "chi2(x1,x2)            = " << c12.to_string() << '\n';
  std::cout << "chi2(x1,x2)+chi2(x2,x1) = " << (c12 + c21).to_string() << '\n';
  std::cout << "chi1(x1)*chi1(x2)      = " << prod.to_string() << '\n';
  std::cout << "equal: " << std::boolalpha << (c12 + c21 == prod) << "\n\n";

  // F_21 . F_1 in the permutation basis
  FBasisSum s = mr_product(Permutation({2, 1}), Permutation({1}));
  std::cout << "F_21 . F_1 =";
  for (const auto& [p, k] : s.terms()) std::cout << " + F_" << p.to_string();
  std::cout << "\n\n";

  // lattice-point transform of the prefix-sum cone against x1 x2 chi_2
  std::cout << "Phi(C_2) = " << transform_closed_form(PrefixCone(2)).to_string() << '\n';
  std::cout << "bridge N=2: " << verify_bridge(2).pass << "\n\n";

  // theta_2 pulled back to the square
  std::cout << "theta_2     = " << theta_form(2).to_string() << '\n';
  std::cout << "d^* theta_2 = " << theta_on_cube(2).to_string() << "\n\n";

  // the cone pairing for even r, odd s
  DgaTriple A = generic_triple(Letter::Alpha, 2), B = generic_triple(Letter::Beta, 1);
  std::cout << "P_t(A,B) = " << pairing_P(param_t(), A, B).to_string() << '\n';
  std::cout << "claim defect: " << cone_claim_defect(2, 1, PairingVariant::Proof).to_string() << '\n';
  std::cout << "homotopy: " << verify_homotopy_t(2, 1).details["C"].get<std::string>() << "\n\n";

  // E1 page in degree 4
  PageRow r = e1_row(4);
  std::cout << "ker delta^4 = " << basis_json(r.kernel).dump() << ", exact: " << r.exact << '\n';

  // a report as the CLI would print it
  std::cout << verify_shuffle_relation(2, 1).to_json(false).dump(2) << '\n';
}
