#ifndef SIS_ERRORS_HPP
#define SIS_ERRORS_HPP

#include <stdexcept>

namespace sis {

/// A computed object violates a structural theorem (e.g. an invariance set
/// that is not a subgroup). Almost always a tolerance misconfiguration.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sis

#endif  // SIS_ERRORS_HPP
