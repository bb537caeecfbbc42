#pragma once

#include <stdexcept>
#include <string>

namespace symdisc {

// Error taxonomy. The CLI maps these onto exit codes:
// parse_error -> 2, argument_error/precondition_error -> 3, size_cap_error -> 4.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public error {
public:
    explicit parse_error(const std::string& msg) : error(msg) {}
    parse_error(const std::string& msg, int line)
        : error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

// Invalid argument or violated operation precondition.
class argument_error : public error {
public:
    using error::error;
};

class precondition_error : public argument_error {
public:
    using argument_error::argument_error;
};

class size_cap_error : public error {
public:
    using error::error;
};

} // namespace symdisc
