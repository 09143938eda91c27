#ifndef ZGAME_ERRORS_HPP
#define ZGAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zgame {

// Raised when a computation would exceed a configured resource ceiling:
// prime table growth, matrix order, offset-set size.
class limit_error : public std::runtime_error {
public:
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zgame

#endif  // ZGAME_ERRORS_HPP
