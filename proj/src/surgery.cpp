#include "sturm/surgery.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace sturm {

std::vector<Nose> find_noses(const Permutation& p) {
    require_sturm(p);
    const int n = p.size();
    std::vector<Nose> out;
    for (int v = 2; v + 1 <= n - 1; ++v) {
        const int a = p(v), b = p(v + 1);
        if (std::abs(a - b) != 1 || std::min(a, b) == 1 || std::max(a, b) == n)
            continue;
        out.push_back({v, v + 1, std::min(a, b) % 2 == 1 ? Side::Upper : Side::Lower});
    }
    return out;
}

RetractResult delete_labels(const Permutation& p, const std::set<int>& removed) {
    const int n = p.size();
    RetractResult r;
    int next = 0;
    for (int v = 1; v <= n; ++v)
        if (!removed.count(v))
            r.relabel[v] = ++next;
    std::vector<int> h0, h1;
    for (int k = 1; k <= n; ++k)
        if (!removed.count(p.inv(k)))
            h0.push_back(r.relabel[p.inv(k)]);
    for (int v = 1; v <= n; ++v)
        if (!removed.count(v))
            h1.push_back(r.relabel[v]);
    r.sigma = permutation_from_orders(h0, h1);
    return r;
}

RetractResult retract_nose(const Permutation& p, int v1, int v2) {
    const int n = p.size();
    if (v1 > v2)
        std::swap(v1, v2);
    if (v1 < 1 || v2 > n || v2 - v1 != 1 || std::abs(p(v1) - p(v2)) != 1)
        throw NotANose("{" + std::to_string(v1) + "," + std::to_string(v2) + "} is not adjacent in both orders");
    if (v1 == 1 || v2 == n || std::min(p(v1), p(v2)) == 1 || std::max(p(v1), p(v2)) == n)
        throw PolarNose("{" + std::to_string(v1) + "," + std::to_string(v2) + "} contains a pole");
    return delete_labels(p, {v1, v2});
}

namespace {

void validate_restriction(const Permutation& p, const RetractResult& r, const char* what) {
    auto v = is_sturm(r.sigma);
    if (!v.sturm())
        throw ValidationFailed(std::string(what) + " result " + r.sigma.str() + " is not Sturm");
    auto z = zero_numbers(p);
    auto zs = zero_numbers(r.sigma);
    for (auto [a, na] : r.relabel) {
        if (z.morse(a) != zs.morse(na))
            throw ValidationFailed(std::string(what) + " changes i(" + std::to_string(a) + ")");
        for (auto [b, nb] : r.relabel)
            if (z.z(a, b) != zs.z(na, nb) || z.sign(a, b) != zs.sign(na, nb))
                throw ValidationFailed(std::string(what) + " changes z(" + std::to_string(b) + "-" +
                                       std::to_string(a) + ")");
    }
}

} // namespace

ScoopResult scoop(const Permutation& p, ScoopSide side) {
    if (!is_three_meander_template(p).ok())
        throw NotBallTemplate(p.str() + " is not a 3-meander template");
    auto a = ball_anatomy(p);
    ScoopResult s;
    s.removed = a.partition[2][side == ScoopSide::East ? 1 : 0];
    s.removed.insert(a.center);
    auto r = delete_labels(p, s.removed);
    validate_restriction(p, r, side == ScoopSide::East ? "east scoop" : "west scoop");
    auto i = morse_numbers(r.sigma);
    if (*std::max_element(i.begin(), i.end()) > 2)
        throw ValidationFailed("scooped permutation " + r.sigma.str() + " is not planar");
    s.sigma_scooped = r.sigma;
    s.relabel = r.relabel;
    return s;
}

std::vector<std::pair<int, int>> scoop_retraction_sequence(const Permutation& p, const std::set<int>& removed) {
    // Labels are tracked in the original numbering; `alive` lists survivors in axis order.
    std::vector<std::pair<int, int>> seq;
    std::function<bool(const Permutation&, const std::vector<int>&, const std::set<int>&)> go =
        [&](const Permutation& q, const std::vector<int>& alive, const std::set<int>& left) {
            if (left.empty())
                return true;
            for (const Nose& nose : find_noses(q)) {
                int a = alive[nose.v1 - 1], b = alive[nose.v2 - 1];
                if (!left.count(a) || !left.count(b))
                    continue;
                auto r = retract_nose(q, nose.v1, nose.v2);
                std::vector<int> next;
                for (int x : alive)
                    if (x != a && x != b)
                        next.push_back(x);
                auto rest = left;
                rest.erase(a);
                rest.erase(b);
                seq.emplace_back(a, b);
                if (go(r.sigma, next, rest))
                    return true;
                seq.pop_back();
            }
            return false;
        };
    std::vector<int> alive(p.size());
    for (int v = 1; v <= p.size(); ++v)
        alive[v - 1] = v;
    if (removed.size() % 2 != 0 || !go(p, alive, removed))
        return {};
    return seq;
}

} // namespace sturm
