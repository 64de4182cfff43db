#ifndef ORBITSTAB_ORBIT_HPP
#define ORBITSTAB_ORBIT_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbitstab/autmap.hpp"

namespace orbitstab {

struct OrbitOptions {
    std::size_t bit_cap = 1000000; // per-point coordinate size cap, in bits
};

/// A finite labeled window of an orbit. Each entry carries the word (signed
/// generator indices, outermost first; index i stands for generators[i],
/// negative for the inverse) that reproduces the point from base_point.
struct OrbitSample {
    std::vector<PlaneAut> generators;
    Point base_point;
    std::vector<std::pair<std::vector<int>, Point>> points; // no duplicates
    int bound = 0;                                          // N (cyclic) or L (BFS)
    std::optional<int> periodic;                            // cyclic only
    bool exhausted = false;
    bool forward_truncated = false;
    bool backward_truncated = false;
    std::optional<PlaneAut> driver; // cyclic case: the driving automorphism

    bool contains(const Point& p) const;
    std::set<std::string> key_set() const;
    std::vector<Point> point_list() const;
    /// Re-evaluate a stored word at base_point.
    Point eval_word(const std::vector<int>& word) const;
    static std::string word_label(const std::vector<int>& word);
};

/// {phi^n(p) : -N <= n <= N}, forward and backward; detects the period and
/// stops early when phi^n(p) = p. A direction whose coordinates exceed the
/// bit cap is truncated and flagged.
OrbitSample cyclic_orbit(const PlaneAut& phi, const Point& p, int N, const OrbitOptions& opt = {});

/// Breadth-first search over words in gens and their inverses up to length L.
OrbitSample group_orbit(const std::vector<PlaneAut>& gens, const Point& p, int L, const OrbitOptions& opt = {});

/// A finite point set presented as an exhausted sample (no generators).
OrbitSample sample_from_points(std::vector<Point> pts);

/// Closure of the set under the diagonal Galois action; idempotent.
std::vector<Point> galois_saturate(const std::vector<Point>& pts);

} // namespace orbitstab

#endif
