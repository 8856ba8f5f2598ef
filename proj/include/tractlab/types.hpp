#ifndef TRACTLAB_TYPES_HPP
#define TRACTLAB_TYPES_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace tractlab {

using Vec = std::vector<double>;

// Thrown on malformed inputs (dimension mismatches, bad configs, ...).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when fewer spectral peaks than requested exist on the grid.
class FormantExtractionError : public std::runtime_error {
public:
    FormantExtractionError(const std::string& what, int found)
        : std::runtime_error(what), found_(found) {}
    int found() const { return found_; }

private:
    int found_;
};

// Thrown by the convex hull when the input is collinear/degenerate.
class DegenerateHull : public std::runtime_error {
public:
    explicit DegenerateHull(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tractlab

#endif
