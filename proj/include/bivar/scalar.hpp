#pragma once

// Exact rational scalars and the error types shared by the whole library.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bivar {

/// Arbitrary-precision rational, always kept in canonical form
/// (positive denominator, reduced).
using Scalar = mpq_class;
using Integer = mpz_class;

/// A violated mathematical precondition (non-poised input, line through a
/// node, invalid lattice specification, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document or unparsable value.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that theory guarantees failed to hold. Indicates a bug or an
/// invalid object passed where a certified one was required.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Scalar& s) { return s.get_str(10); }

inline Scalar parse_scalar(std::string_view text) {
  std::string str(text);
  auto slash = str.find('/');
  auto valid_int = [](std::string_view digits) {
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
      digits.remove_prefix(1);
    if (digits.empty()) return false;
    for (char c : digits)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(str)) throw InputError("not a rational number: '" + str + "'");
  } else {
    std::string_view num(str.data(), slash);
    std::string_view den(str.data() + slash + 1, str.size() - slash - 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
      throw InputError("not a rational number: '" + str + "'");
  }
  if (!str.empty() && str.front() == '+') str.erase(0, 1);
  Scalar s;
  if (s.set_str(str, 10) != 0) throw InputError("not a rational number: '" + str + "'");
  if (s.get_den() == 0) throw InputError("zero denominator: '" + str + "'");
  s.canonicalize();
  return s;
}

}  // namespace bivar
