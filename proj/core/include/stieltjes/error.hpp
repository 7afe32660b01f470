#ifndef STIELTJES_ERROR_HPP
#define STIELTJES_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace stieltjes {

// All precondition violations and input errors carry a stable machine
// readable code alongside the human readable message.  The CLI maps any
// error to exit code 2 and prints "<code>: <detail>".
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace stieltjes

#endif
