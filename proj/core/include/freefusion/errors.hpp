#pragma once

#include <stdexcept>
#include <string>

namespace freefusion {

// malformed or inconsistent input data (unknown labels, bad files, context mix-ups)
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// numerical procedure failed (e.g. eigenvalue iteration did not converge)
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// a fusion product left the modeled truncation window; callers decide whether
// to abort or to record a partial, flagged result
class truncation_overflow : public std::runtime_error {
public:
    explicit truncation_overflow(const std::string& what) : std::runtime_error(what) {}
};

} // namespace freefusion
