#include <novikit/chain_complex.hpp>

namespace nk {

Grade grade_of(const AnyComplex& c) {
  return std::visit([](const auto& x) { return x.grade(); }, c);
}

AnyComplex base_change(const AnyComplex& c, Grade target) {
  const Grade from = grade_of(c);
  if (static_cast<int>(target) < static_cast<int>(from))
    throw NarrowingNotSupported("cannot change base from " + to_string(from) + " to " + to_string(target));
  return std::visit(
      [target](const auto& x) -> AnyComplex {
        switch (target) {
          case Grade::Integer:
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, IntComplex>) return x;
            break;
          case Grade::Laurent:
            if constexpr (!std::is_same_v<std::decay_t<decltype(x)>, RationalComplex>)
              return base_change<LaurentPoly>(x);
            break;
          case Grade::Rational: return base_change<RationalFunction>(x);
        }
        throw NarrowingNotSupported("narrowing base change");
      },
      c);
}

}  // namespace nk
