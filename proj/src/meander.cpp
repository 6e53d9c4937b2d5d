#include "sturm/meander.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>
#include <thread>

namespace sturm {

namespace {

int sgn(int x) { return (x > 0) - (x < 0); }

// (-1)^(j+1)
int alt(int j) { return (j % 2 == 1) ? 1 : -1; }

std::vector<int> raw_morse_h1(const Permutation& p) {
    const int n = p.size();
    std::vector<int> i(n, 0);
    for (int j = 1; j < n; ++j)
        i[j] = i[j - 1] + alt(j) * sgn(p(j + 1) - p(j));
    return i;
}

} // namespace

Permutation::Permutation(std::vector<int> one_line) : map_(std::move(one_line)) {
    const int n = size();
    if (n == 0)
        throw ParseError("empty permutation");
    inv_.assign(n, 0);
    for (int j = 1; j <= n; ++j) {
        int k = map_[j - 1];
        if (k < 1 || k > n)
            throw ParseError("value " + std::to_string(k) + " out of range 1.." + std::to_string(n));
        if (inv_[k - 1] != 0)
            throw ParseError("duplicate value " + std::to_string(k));
        inv_[k - 1] = j;
    }
}

std::vector<int> Permutation::h1() const {
    std::vector<int> h(size());
    for (int j = 0; j < size(); ++j)
        h[j] = j + 1;
    return h;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << '[';
    for (int j = 0; j < size(); ++j)
        os << (j ? "," : "") << map_[j];
    os << ']';
    return os.str();
}

Permutation parse_permutation(std::string_view text) {
    std::string s(text);
    auto first = s.find_first_not_of(" \t\r\n");
    auto last = s.find_last_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw ParseError("empty input");
    s = s.substr(first, last - first + 1);
    if (!s.empty() && (s.front() == '[' || s.front() == '{')) {
        char close = s.front() == '[' ? ']' : '}';
        if (s.back() != close)
            throw ParseError("unbalanced bracket");
        s = s.substr(1, s.size() - 2);
    }
    for (char& c : s)
        if (c == ',')
            c = ' ';
    std::istringstream is(s);
    std::vector<int> values;
    std::string tok;
    while (is >> tok) {
        if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError("not an integer: '" + tok + "'");
        try {
            values.push_back(std::stoi(tok));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range: '" + tok + "'");
        }
    }
    if (values.empty())
        throw ParseError("empty input");
    return Permutation(std::move(values));
}

Permutation permutation_from_orders(const std::vector<int>& h0, const std::vector<int>& h1) {
    if (h0.size() != h1.size())
        throw ParseError("orders differ in length");
    std::vector<std::pair<int, int>> pos;
    pos.reserve(h0.size());
    for (std::size_t k = 0; k < h0.size(); ++k)
        pos.emplace_back(h0[k], static_cast<int>(k) + 1);
    std::sort(pos.begin(), pos.end());
    std::vector<int> sigma;
    sigma.reserve(h1.size());
    for (int v : h1) {
        auto it = std::lower_bound(pos.begin(), pos.end(), std::make_pair(v, 0));
        if (it == pos.end() || it->first != v)
            throw ParseError("label " + std::to_string(v) + " missing from h0");
        sigma.push_back(it->second);
    }
    return Permutation(std::move(sigma));
}

Meander build_meander(const Permutation& p) {
    const int n = p.size();
    Meander m;
    m.curve_order = p.h0();
    for (int k = 1; k < n; ++k) {
        int a = p.inv(k), b = p.inv(k + 1);
        Arc arc{std::min(a, b), std::max(a, b)};
        (k % 2 == 1 ? m.upper_arcs : m.lower_arcs).push_back(arc);
    }
    auto check = [](const std::vector<Arc>& arcs, bool upper) {
        for (std::size_t x = 0; x < arcs.size(); ++x)
            for (std::size_t y = x + 1; y < arcs.size(); ++y) {
                auto [a, b] = arcs[x];
                auto [c, d] = arcs[y];
                if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
                    throw NotAMeander(arcs[x], arcs[y], upper);
            }
    };
    check(m.upper_arcs, true);
    check(m.lower_arcs, false);
    return m;
}

MorseVector morse_numbers(const Permutation& p) {
    const int n = p.size();
    if (p(1) != 1 || p(n) != n)
        throw NotDissipative("sigma(1) = " + std::to_string(p(1)) + ", sigma(n) = " + std::to_string(p(n)));
    return raw_morse_h1(p);
}

MorseVector morse_numbers_h0(const Permutation& p) {
    const int n = p.size();
    if (p(1) != 1 || p(n) != n)
        throw NotDissipative("sigma(1) = " + std::to_string(p(1)) + ", sigma(n) = " + std::to_string(p(n)));
    std::vector<int> i(n, 0);
    for (int j = 1; j < n; ++j)
        i[p.inv(j + 1) - 1] = i[p.inv(j) - 1] + alt(j) * sgn(p.inv(j + 1) - p.inv(j));
    return i;
}

SturmVerdict is_sturm(const Permutation& p) {
    const int n = p.size();
    SturmVerdict v;
    v.odd = n % 2 == 1;
    v.dissipative = p(1) == 1 && p(n) == n;
    try {
        build_meander(p);
        v.meander = true;
    } catch (const NotAMeander&) {
        v.meander = false;
    }
    auto i = raw_morse_h1(p);
    v.morse = std::all_of(i.begin(), i.end(), [](int x) { return x >= 0; }) && i.back() == 0;
    return v;
}

void require_sturm(const Permutation& p) {
    auto v = is_sturm(p);
    if (!v.sturm())
        throw NotSturm(p.str() + (v.odd ? "" : " has even size") + (v.dissipative ? "" : " is not dissipative") +
                       (v.meander ? "" : " is not a meander") + (v.morse ? "" : " has a negative Morse number"));
}

namespace {

// Depth-first construction along the axis with Morse and non-crossing pruning.
class SturmSearch {
public:
    explicit SturmSearch(int n) : n_(n), sigma_(n + 1, 0), pos_(n + 2, 0) {}

    void run_from(int second, std::vector<Permutation>& out) {
        out_ = &out;
        place(1, 1);
        if (n_ == 1) {
            out.emplace_back(std::vector<int>{1});
        } else if (admissible(2, second)) {
            place(2, second);
            dfs(2);
            unplace(2);
        }
        unplace(1);
    }

private:
    int partner(int k, bool upper) const {
        int q;
        if (upper)
            q = (k % 2 == 1) ? k + 1 : k - 1;
        else
            q = (k % 2 == 0) ? k + 1 : k - 1;
        return (q >= 1 && q <= n_) ? q : 0;
    }

    bool closes_cleanly(int j, int k, bool upper) const {
        int q = partner(k, upper);
        if (q == 0 || pos_[q] == 0)
            return true;
        int p = pos_[q];
        for (int x = p + 1; x < j; ++x) {
            int c = partner(sigma_[x], upper);
            if (c == 0)
                continue;
            int pc = pos_[c];
            if (pc == 0 || pc < p)
                return false;
        }
        return true;
    }

    bool admissible(int j, int k) const {
        if (pos_[k] != 0)
            return false;
        if ((k == n_) != (j == n_))
            return false;
        int step = ((j - 1) % 2 == 1 ? 1 : -1) * (k > sigma_[j - 1] ? 1 : -1);
        int i = morse_ + step;
        if (i < 0 || (j == n_ && i != 0))
            return false;
        return closes_cleanly(j, k, true) && closes_cleanly(j, k, false);
    }

    void place(int j, int k) {
        if (j > 1)
            morse_stack_.push_back(morse_), morse_ += ((j - 1) % 2 == 1 ? 1 : -1) * (k > sigma_[j - 1] ? 1 : -1);
        sigma_[j] = k;
        pos_[k] = j;
    }

    void unplace(int j) {
        pos_[sigma_[j]] = 0;
        sigma_[j] = 0;
        if (j > 1)
            morse_ = morse_stack_.back(), morse_stack_.pop_back();
    }

    void dfs(int j) {
        if (j == n_) {
            out_->emplace_back(std::vector<int>(sigma_.begin() + 1, sigma_.end()));
            return;
        }
        for (int k = 2; k <= n_; ++k) {
            if (!admissible(j + 1, k))
                continue;
            place(j + 1, k);
            dfs(j + 1);
            unplace(j + 1);
        }
    }

    int n_;
    int morse_ = 0;
    std::vector<int> morse_stack_;
    std::vector<int> sigma_;
    std::vector<int> pos_;
    std::vector<Permutation>* out_ = nullptr;
};

} // namespace

std::vector<Permutation> enumerate_sturm(int n, int max_n, int jobs) {
    if (n > max_n)
        throw BoundExceeded("n = " + std::to_string(n) + " exceeds bound " + std::to_string(max_n));
    if (n < 1 || n % 2 == 0)
        return {};
    if (n == 1) {
        std::vector<Permutation> out;
        SturmSearch(1).run_from(0, out);
        return out;
    }
    std::vector<int> seconds;
    for (int k = 2; k <= n; ++k)
        seconds.push_back(k);
    std::vector<std::vector<Permutation>> parts(seconds.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < seconds.size(); t = next++)
            SturmSearch(n).run_from(seconds[t], parts[t]);
    };
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(seconds.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    std::vector<Permutation> out;
    for (auto& part : parts)
        for (auto& q : part)
            if (is_sturm(q).sturm())
                out.push_back(std::move(q));
    return out;
}

TrivialEquivalences trivial_equivalences(const Permutation& p) {
    const int n = p.size();
    std::vector<int> conj(n);
    for (int j = 1; j <= n; ++j)
        conj[j - 1] = n + 1 - p(n + 1 - j);
    Permutation kappa(conj);
    return {p.inverse(), kappa, kappa.inverse()};
}

} // namespace sturm
