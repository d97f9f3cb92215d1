#include "braids/permutation_point.hpp"

#include "braids/errors.hpp"

namespace braids {

ExactConfiguration embed(const PermutationPoint& p) {
  ExactConfiguration z;
  z.points.resize(p.pi.size());
  for (int k = 1; k <= p.pi.size(); ++k)
    z.points[k - 1] = QPoint{Rational(p.pi(k)), Rational(p.phi(k))};
  return z;
}

PermutationPoint act_on_point(const Permutation& sigma, const PermutationPoint& p) {
  Permutation si = sigma.inverse();
  return PermutationPoint{compose(p.pi, si), compose(p.phi, si)};
}

ExactConfiguration act_on_configuration(const Permutation& sigma,
                                        const ExactConfiguration& z) {
  if (sigma.size() != z.n())
    throw ContractViolation("act_on_configuration: size mismatch");
  ExactConfiguration out;
  out.points.resize(z.points.size());
  Permutation si = sigma.inverse();
  for (int k = 1; k <= z.n(); ++k) out.points[k - 1] = z.points[si(k) - 1];
  return out;
}

}  // namespace braids
