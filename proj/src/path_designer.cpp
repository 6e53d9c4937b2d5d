#include "sturm/path_designer.hpp"

#include "sturm/ball_template.hpp"

#include <map>
#include <optional>
#include <set>

namespace sturm {

namespace {

class PathSearch {
public:
    PathSearch(const SignedTemplate& t, int iota, std::size_t limit) : t_(t), limit_(limit) {
        for (auto [v, d] : t.dim) {
            if (d > 0) {
                auto rule = traversal_rule(d, iota);
                pred_[v] = cascade_target(t, v, rule.before);
                succ_[v] = cascade_target(t, v, rule.after);
            }
            for (int w : t.boundary.at(v))
                up_[w].push_back(v);
        }
    }

    std::vector<std::vector<int>> run() {
        path_ = {t_.north};
        used_ = {t_.north};
        extend(t_.north);
        return std::move(found_);
    }

private:
    void visit(int next) {
        if (used_.count(next))
            return;
        used_.insert(next);
        path_.push_back(next);
        extend(next);
        path_.pop_back();
        used_.erase(next);
    }

    void extend(int c) {
        if (found_.size() >= limit_)
            return;
        if (path_.size() == t_.dim.size()) {
            if (c == t_.south)
                found_.push_back(path_);
            return;
        }
        if (c == t_.south)
            return;
        if (t_.dim.at(c) > 0)
            if (auto s = succ_.at(c))
                visit(*s);
        auto it = up_.find(c);
        if (it == up_.end())
            return;
        for (int d : it->second) {
            auto p = pred_.at(d);
            if (p && *p == c)
                visit(d);
        }
    }

    const SignedTemplate& t_;
    std::size_t limit_;
    std::map<int, std::optional<int>> pred_, succ_;
    std::map<int, std::vector<int>> up_;
    std::vector<int> path_;
    std::set<int> used_;
    std::vector<std::vector<int>> found_;
};

PathPair unique_pair(const SignedTemplate& t) {
    auto sols = design_paths(t, 2);
    for (int iota = 0; iota <= 1; ++iota) {
        if (sols[iota].empty())
            throw NoPath("no admissible h" + std::to_string(iota) + " path");
        if (sols[iota].size() > 1)
            throw MultiplePaths("several admissible h" + std::to_string(iota) + " paths");
    }
    PathPair pp;
    pp.h0 = sols[0][0];
    pp.h1 = sols[1][0];
    pp.sigma = permutation_from_orders(pp.h0, pp.h1);
    return pp;
}

} // namespace

std::array<std::vector<std::vector<int>>, 2> design_paths(const SignedTemplate& t, std::size_t limit) {
    return {PathSearch(t, 0, limit).run(), PathSearch(t, 1, limit).run()};
}

PathPair zs_pair(const SignedTemplate& t) { return unique_pair(t); }

PathPair zs_pair(const CellComplex& planar) { return zs_pair(formal_hemispheres(planar)); }

PathPair sz_pair(const SignedTemplate& t) {
    auto pp = zs_pair(t);
    std::swap(pp.h0, pp.h1);
    pp.sigma = permutation_from_orders(pp.h0, pp.h1);
    return pp;
}

PathPair sz_pair(const CellComplex& planar) { return sz_pair(formal_hemispheres(planar)); }

PathPair szs_pair(const SignedTemplate& t) {
    int balls = 0;
    for (auto [v, d] : t.dim)
        balls += d == 3;
    if (balls != 1)
        throw TemplateCheckFailed("expected one 3-cell, found " + std::to_string(balls));
    auto pp = unique_pair(t);
    if (!is_three_meander_template(pp.sigma).ok())
        throw TemplateCheckFailed(pp.sigma.str() + " is not a 3-meander template");
    return pp;
}

PathPair szs_pair(const CellComplex& c, const Decoration& d) { return szs_pair(formal_hemispheres(c, d)); }

bool roundtrip(const Permutation& p) {
    try {
        auto b = complex_from_sigma(p);
        auto pp = szs_pair(b.complex, b.decoration);
        return pp.h1 == p.h1() && pp.h0 == p.h0() && pp.sigma == p;
    } catch (const Error&) {
        return false;
    }
}

bool planar_roundtrip(const Permutation& p) {
    try {
        auto c = planar_complex_from_sigma(p);
        auto pp = zs_pair(c);
        return pp.h1 == p.h1() && pp.h0 == p.h0() && pp.sigma == p;
    } catch (const Error&) {
        return false;
    }
}

} // namespace sturm
