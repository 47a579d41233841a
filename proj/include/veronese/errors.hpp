#ifndef VERONESE_ERRORS_HPP
#define VERONESE_ERRORS_HPP

#include <stdexcept>

namespace veronese {

/// Input violates an operation's precondition (wrong degree, inhomogeneous
/// curve, prime too small, ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace veronese

#endif
