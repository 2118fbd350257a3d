// Builds a few solution families, checks them symbolically and evaluates them.

#include <iostream>

#include "antilap.hpp"

int main() {
  using namespace antilap;

  std::cout << "a-coefficients for n = 11:";
  for (int k = 3; k <= 11; k += 2) std::cout << " " << to_string(a_coeff(k, 11));
  std::cout << "\n";

  const TermSum2D psi5 = build_2d({Family::Psi, 5});
  std::cout << "Psi_5 = " << to_json(psi5).dump() << "\n";
  std::cout << "anti-z operator applied to Psi_5 vanishes: "
            << (apply_operator(OperatorKind::AntiZ, 5, psi5).empty() ? "yes" : "no") << "\n";
  std::cout << "Psi_5(1, 0.5) = " << format_double(eval_termsum(psi5, 1.0, 0.5)) << "\n";

  const RingIntegrand ring = build_ring({Family::PsiRing, 5});
  const RingValue v = eval_ring(ring, 2.0, 1.0, 1.0);
  std::cout << "psi-ring_5(2, 1; a = 1) = " << format_double(v.value) << " +- " << format_double(v.error) << "\n";

  const PairingReport rep = pairing({Family::PsiBar, 5});
  std::cout << "pairing of psi-bar_5 with a bump: " << format_double(rep.limit) << " (expected "
            << format_double(rep.expected) << ")\n";
  return 0;
}
