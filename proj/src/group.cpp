#include "s3color/group.hpp"

#include <stdexcept>
#include <string>

namespace s3color {

std::string_view to_string(S3 g) { return detail::kNames[static_cast<int>(g)]; }

std::string_view to_string(S3Class c) {
  switch (c) {
    case S3Class::Identity:
      return "Identity";
    case S3Class::Transposition:
      return "Transposition";
    default:
      return "ThreeCycle";
  }
}

S3 parse_element(std::string_view token) {
  for (int g = 0; g < 6; ++g)
    if (token == detail::kNames[g]) return static_cast<S3>(g);
  throw std::invalid_argument("unknown group element token '" +
                              std::string(token) + "'");
}

}  // namespace s3color
