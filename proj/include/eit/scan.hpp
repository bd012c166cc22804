#pragma once

#include <functional>
#include <string>
#include <vector>

namespace eit {

// Reference (serial) path is kept alongside the OpenMP one so results can be
// compared; both fill preassigned slots in grid order, so output is
// identical either way.
enum class ExecutionPolicy { Serial, Parallel };

enum class GridScale { Linear, Log };

// One scan axis: n points from lo to hi, linearly or logarithmically spaced.
struct GridAxis {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;
    GridScale scale = GridScale::Linear;

    std::vector<double> values() const;
    // Throws ConfigError unless the grid is strictly monotone and usable.
    void validate() const;

    // Parses "<name>:<lo>:<hi>:<n>:<log|lin>".
    static GridAxis parse(const std::string& spec);
};

// A profile over one or two parameter axes.  `values` is stored row-major
// with axis1 as the slow index; `valid[i]` is false where the point could
// not be evaluated (the value there is NaN).
struct SpectralScan {
    std::string quantity;           // e.g. "rho33", "r", "inv_q"
    GridAxis axis1;
    GridAxis axis2;                 // n == 0 for one-dimensional scans
    std::vector<double> values;
    std::vector<bool> valid;
    std::vector<std::pair<std::string, std::string>> metadata;

    bool two_dimensional() const { return axis2.n > 0; }
    std::size_t size() const {
        return static_cast<std::size_t>(axis1.n) *
               (two_dimensional() ? static_cast<std::size_t>(axis2.n) : 1);
    }
    double at(int i, int j = 0) const {
        return values[static_cast<std::size_t>(i) *
                          (two_dimensional() ? axis2.n : 1) +
                      j];
    }
    bool valid_at(int i, int j = 0) const {
        return valid[static_cast<std::size_t>(i) *
                         (two_dimensional() ? axis2.n : 1) +
                     j];
    }

    // Deterministic serializations: fixed grid order, shortest
    // round-trip-exact floats, a config-hash comment line first.
    std::string to_csv() const;
    std::string to_json() const;
};

// Shortest decimal representation that parses back to exactly the same
// double.
std::string format_double(double v);

// 64-bit FNV-1a, used to stamp outputs with a hash of the producing config.
std::uint64_t fnv1a(const std::string& s);

// Runs fn(i) for i in [0, n) under the chosen policy.  fn must only write
// to its own slot.
void for_each_index(std::size_t n, ExecutionPolicy policy,
                    const std::function<void(std::size_t)>& fn);

}  // namespace eit
