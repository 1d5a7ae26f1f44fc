#pragma once

#include <stdexcept>
#include <string>

namespace hilbcells {

// Domain error carrying one of the fixed error names (NonAdmissible, InvalidT, ...).
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(const std::string& name, const std::string& what)
{
    throw Error(name, what);
}

} // namespace hilbcells
