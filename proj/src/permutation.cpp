#include "ytdist/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ytdist {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotABijection: return "NotABijection";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::MalformedCycle: return "MalformedCycle";
        case Errc::ElementOutOfRange: return "ElementOutOfRange";
        case Errc::NotConnected: return "NotConnected";
        case Errc::HasCycle: return "HasCycle";
        case Errc::NonPositiveWeight: return "NonPositiveWeight";
        case Errc::DegreeTooHigh: return "DegreeTooHigh";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::SizeMismatch: return "SizeMismatch";
        case Errc::NotAYTree: return "NotAYTree";
        case Errc::CenterHasNoBranch: return "CenterHasNoBranch";
        case Errc::NotOnPath: return "NotOnPath";
        case Errc::CenterNotInCycle: return "CenterNotInCycle";
        case Errc::NotBalanced: return "NotBalanced";
        case Errc::NotUnbalanced: return "NotUnbalanced";
        case Errc::NonSortingInput: return "NonSortingInput";
        case Errc::NoProgress: return "NoProgress";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

Permutation::Permutation(int n) {
    if (n < 1) fail(Errc::LengthMismatch, "n must be >= 1");
    img_.resize(n);
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    Permutation p(std::max(n, 1));
    if (n < 1) fail(Errc::LengthMismatch, "empty image list");
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        int v = images[i];
        if (v < 1 || v > n)
            fail(Errc::NotABijection, "image " + std::to_string(v) + " out of [1," + std::to_string(n) + "]");
        if (seen[v - 1]) fail(Errc::NotABijection, "image " + std::to_string(v) + " repeats");
        seen[v - 1] = true;
        p.img_[i] = v - 1;
    }
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation q(size());
    for (int i = 0; i < size(); ++i) q.img_[img_[i]] = i;
    return q;
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
    return out;
}

void Permutation::apply_transposition(int a, int b) {
    if (a < 1 || a > size() || b < 1 || b > size()) fail(Errc::OutOfRange, "transposition endpoint out of range");
    std::swap(img_[a - 1], img_[b - 1]);
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) fail(Errc::SizeMismatch, "composing permutations of different sizes");
    std::vector<int> images(p.size());
    for (int i = 1; i <= p.size(); ++i) images[i - 1] = p(q(i));
    return Permutation::from_images(images);
}

Cycle::Cycle(std::vector<int> elements) : elems(std::move(elements)) {
    if (elems.size() < 2) fail(Errc::MalformedCycle, "cycle needs at least two elements");
    auto it = std::min_element(elems.begin(), elems.end());
    std::rotate(elems.begin(), it, elems.end());
    std::vector<int> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(Errc::MalformedCycle, "repeated element in cycle");
}

Permutation cycle_to_perm(const Cycle& c, int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    const auto& e = c.elems;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 1 || e[i] > n) fail(Errc::ElementOutOfRange, "cycle element " + std::to_string(e[i]));
        images[e[i] - 1] = e[(i + 1) % e.size()];
    }
    return Permutation::from_images(images);
}

Permutation transposition_to_perm(const Transposition& t, int n) {
    return cycle_to_perm(Cycle({t.a, t.b}), n);
}

std::vector<Cycle> cycle_decomposition(const Permutation& p) {
    const int n = p.size();
    std::vector<bool> seen(n + 1, false);
    std::vector<Cycle> cycles;
    for (int i = 1; i <= n; ++i) {
        if (seen[i] || p(i) == i) continue;
        std::vector<int> elems;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            elems.push_back(j);
            j = p(j);
        }
        cycles.emplace_back(std::move(elems));
    }
    // min-first canonical rotation plus scan order makes this already sorted
    return cycles;
}

std::vector<int> support(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) != i) out.push_back(i);
    return out;
}

namespace {

std::vector<int> read_ints(const std::string& text) {
    std::vector<int> vals;
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char ch : text) cleaned.push_back(ch == ',' ? ' ' : ch);
    std::istringstream in(cleaned);
    int v = 0;
    while (in >> v) vals.push_back(v);
    if (!in.eof()) fail(Errc::MalformedCycle, "unexpected token in permutation text");
    return vals;
}

} // namespace

Permutation parse_one_line(const std::string& text, int n) {
    std::string body = text;
    // tolerate "(a, b, c)" wrapping of one-line form
    auto first = body.find_first_not_of(" \t\r\n");
    auto last = body.find_last_not_of(" \t\r\n");
    if (first != std::string::npos && body[first] == '(' && body[last] == ')' &&
        body.find('(', first + 1) == std::string::npos) {
        body = body.substr(first + 1, last - first - 1);
    }
    std::vector<int> vals = read_ints(body);
    if (static_cast<int>(vals.size()) != n)
        fail(Errc::LengthMismatch, "expected " + std::to_string(n) + " images, got " + std::to_string(vals.size()));
    return Permutation::from_images(vals);
}

Permutation parse_cycles(const std::string& text, int n) {
    Permutation acc(n);
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (ch != '(') fail(Errc::MalformedCycle, "expected '(' in cycle notation");
        auto close = text.find(')', i);
        if (close == std::string::npos) fail(Errc::MalformedCycle, "unbalanced parenthesis");
        std::vector<int> elems = read_ints(text.substr(i + 1, close - i - 1));
        i = close + 1;
        if (elems.empty()) continue; // "()" acts as identity
        for (int v : elems)
            if (v < 1 || v > n) fail(Errc::ElementOutOfRange, "cycle element " + std::to_string(v));
        if (elems.size() == 1) continue; // fixed point
        acc = compose(acc, cycle_to_perm(Cycle(elems), n));
    }
    return acc;
}

Permutation parse_permutation(const std::string& text, int n) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '(' && text.find(',') == std::string::npos)
        return parse_cycles(text, n);
    return parse_one_line(text, n);
}

std::string format_one_line(const Permutation& p) {
    std::ostringstream out;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out << ' ';
        out << p(i);
    }
    return out.str();
}

std::string format_cycles(const Permutation& p) {
    auto cycles = cycle_decomposition(p);
    if (cycles.empty()) return "()";
    std::ostringstream out;
    for (const auto& c : cycles) {
        out << '(';
        for (std::size_t i = 0; i < c.elems.size(); ++i) {
            if (i > 0) out << ' ';
            out << c.elems[i];
        }
        out << ')';
    }
    return out.str();
}

} // namespace ytdist
