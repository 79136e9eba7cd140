#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace spinsq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct DegenerateForm : Error {
    explicit DegenerateForm(const std::string& what) : Error(what) {}
    DegenerateForm(const std::string& what, std::array<int, 4> site)
        : Error(what + " at site (" + std::to_string(site[0]) + "," + std::to_string(site[1]) + "," +
                std::to_string(site[2]) + "," + std::to_string(site[3]) + ")"),
          site_index(site), has_site(true) {}
    std::array<int, 4> site_index{};
    bool has_site = false;
};

struct NonQuantizedFlux : Error {
    using Error::Error;
};

struct AntipodalEdge : Error {
    using Error::Error;
};

struct NonIntegerDegree : Error {
    using Error::Error;
};

struct ZeroField : Error {
    using Error::Error;
};

// archive errors
struct CorruptHeader : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct UnsupportedVersion : Error {
    using Error::Error;
};

} // namespace spinsq
