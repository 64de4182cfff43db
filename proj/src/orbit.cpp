#include "orbitstab/orbit.hpp"

#include <deque>
#include <sstream>

namespace orbitstab {

bool OrbitSample::contains(const Point& p) const {
    for (const auto& [w, q] : points)
        if (q == p) return true;
    return false;
}

std::set<std::string> OrbitSample::key_set() const {
    std::set<std::string> keys;
    for (const auto& [w, q] : points) keys.insert(q.str());
    return keys;
}

std::vector<Point> OrbitSample::point_list() const {
    std::vector<Point> out;
    out.reserve(points.size());
    for (const auto& [w, q] : points) out.push_back(q);
    return out;
}

Point OrbitSample::eval_word(const std::vector<int>& word) const {
    Point q = base_point;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int idx = *it;
        if (idx > 0)
            q = generators[idx - 1].apply(q);
        else
            q = invert(generators[-idx - 1]).apply(q);
    }
    return q;
}

std::string OrbitSample::word_label(const std::vector<int>& word) {
    if (word.empty()) return "id";
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << "*";
        int idx = word[i];
        os << "g" << (idx > 0 ? idx - 1 : -idx - 1);
        if (idx < 0) os << "^-1";
    }
    return os.str();
}

OrbitSample cyclic_orbit(const PlaneAut& phi, const Point& p, int N, const OrbitOptions& opt) {
    if (N < 1) throw Error("cyclic_orbit requires N >= 1");
    OrbitSample s;
    s.generators = {phi};
    s.base_point = p;
    s.bound = N;
    s.driver = phi;

    PlaneAut phi_inv = invert(phi);
    std::vector<Point> forward, backward;
    Point q = p;
    for (int n = 1; n <= N; ++n) {
        q = phi.apply(q);
        if (q == p) {
            s.periodic = n;
            break;
        }
        if (q.bit_size() > opt.bit_cap) {
            s.forward_truncated = true;
            break;
        }
        forward.push_back(q);
    }
    if (s.periodic) {
        // exactly one period of points, forward labels only
        s.exhausted = true;
        s.points.emplace_back(std::vector<int>{}, p);
        std::vector<int> w;
        for (const auto& fp : forward) {
            w.push_back(1);
            s.points.emplace_back(w, fp);
        }
        return s;
    }
    q = p;
    for (int n = 1; n <= N; ++n) {
        q = phi_inv.apply(q);
        if (q == p) {
            // backward hit the base before forward did: same period
            s.periodic = n;
            break;
        }
        if (q.bit_size() > opt.bit_cap) {
            s.backward_truncated = true;
            break;
        }
        backward.push_back(q);
    }
    if (s.periodic) {
        int n = *s.periodic;
        s.exhausted = true;
        s.points.emplace_back(std::vector<int>{}, p);
        std::vector<int> w;
        for (int i = 0; i < n - 1 && i < static_cast<int>(forward.size()); ++i) {
            w.push_back(1);
            s.points.emplace_back(w, forward[i]);
        }
        return s;
    }

    // two-sided window, interleaved deterministically: 0, +1, -1, +2, -2, ...
    s.points.emplace_back(std::vector<int>{}, p);
    std::size_t m = std::max(forward.size(), backward.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (i < forward.size())
            s.points.emplace_back(std::vector<int>(i + 1, 1), forward[i]);
        if (i < backward.size())
            s.points.emplace_back(std::vector<int>(i + 1, -1), backward[i]);
    }
    return s;
}

OrbitSample group_orbit(const std::vector<PlaneAut>& gens, const Point& p, int L, const OrbitOptions& opt) {
    if (L < 1) throw Error("group_orbit requires L >= 1");
    if (gens.empty()) throw Error("group_orbit requires at least one generator");
    OrbitSample s;
    s.generators = gens;
    s.base_point = p;
    s.bound = L;

    std::vector<PlaneAut> steps; // g0, g0^-1, g1, g1^-1, ...
    std::vector<int> step_idx;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        steps.push_back(gens[i]);
        step_idx.push_back(static_cast<int>(i) + 1);
        steps.push_back(invert(gens[i]));
        step_idx.push_back(-(static_cast<int>(i) + 1));
    }

    std::set<std::string> seen{p.str()};
    s.points.emplace_back(std::vector<int>{}, p);
    std::deque<std::pair<std::vector<int>, Point>> frontier{{std::vector<int>{}, p}};
    for (int depth = 1; depth <= L; ++depth) {
        std::deque<std::pair<std::vector<int>, Point>> next;
        for (const auto& [w, q] : frontier) {
            for (std::size_t k = 0; k < steps.size(); ++k) {
                Point r = steps[k].apply(q);
                if (r.bit_size() > opt.bit_cap)
                    throw SizeLimitError("orbit coordinate size limit exceeded");
                auto key = r.str();
                if (seen.count(key)) continue;
                seen.insert(key);
                std::vector<int> nw{step_idx[k]};
                nw.insert(nw.end(), w.begin(), w.end());
                s.points.emplace_back(nw, r);
                next.emplace_back(std::move(nw), std::move(r));
            }
        }
        if (next.empty()) {
            s.exhausted = true; // frontier emptied within the bound
            break;
        }
        frontier = std::move(next);
    }
    return s;
}

OrbitSample sample_from_points(std::vector<Point> pts) {
    if (pts.empty()) throw Error("sample_from_points requires a nonempty set");
    OrbitSample s;
    s.base_point = pts.front();
    s.exhausted = true;
    s.bound = 0;
    std::set<std::string> seen;
    for (auto& q : pts) {
        if (seen.insert(q.str()).second) s.points.emplace_back(std::vector<int>{}, std::move(q));
    }
    return s;
}

std::vector<Point> galois_saturate(const std::vector<Point>& pts) {
    std::vector<Point> out;
    std::set<std::string> seen;
    auto push = [&](const Point& q) {
        if (seen.insert(q.str()).second) out.push_back(q);
    };
    for (const auto& p : pts) push(p);
    // diagonal action of the extension's automorphism group
    for (std::size_t i = 0; i < out.size(); ++i) {
        Point q{out[i].x.galois_apply(), out[i].y.galois_apply()};
        push(q);
    }
    return out;
}

} // namespace orbitstab
