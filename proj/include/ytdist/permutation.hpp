#pragma once

#include <string>
#include <vector>

#include "ytdist/errors.hpp"

namespace ytdist {

/// A bijection on the ground set [n] = {1, ..., n}, stored in one-line form.
/// All interfaces are 1-indexed; internal storage is 0-indexed.
class Permutation {
public:
    /// Identity on [n].
    explicit Permutation(int n);

    /// Build from 1-based images (images[i-1] = pi(i)). Throws NotABijection.
    static Permutation from_images(const std::vector<int>& images);

    int size() const { return static_cast<int>(img_.size()); }

    /// pi(i), 1-based.
    int operator()(int i) const { return img_[i - 1] + 1; }

    bool is_identity() const;

    Permutation inverse() const;

    /// One-line form, 1-based images.
    std::vector<int> one_line() const;

    /// Right-multiply by the transposition (a b) in place: this <- this * (a b),
    /// which swaps the images at positions a and b.
    void apply_transposition(int a, int b);

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> img_; // img_[i] = pi(i+1) - 1
};

/// Swap of two distinct elements; stored with a < b.
struct Transposition {
    int a;
    int b;

    Transposition(int a_, int b_) : a(a_), b(b_) {
        if (a == b) fail(Errc::MalformedCycle, "transposition with equal endpoints");
        if (a > b) std::swap(a, b);
    }

    bool operator==(const Transposition&) const = default;
};

/// A k-cycle (v1 ... vk), k >= 2, canonically rotated so v1 is the minimum element.
struct Cycle {
    std::vector<int> elems;

    explicit Cycle(std::vector<int> elements);

    int length() const { return static_cast<int>(elems.size()); }

    bool operator==(const Cycle&) const = default;
};

/// (p * q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

/// The permutation acting as the cycle c on [n].
Permutation cycle_to_perm(const Cycle& c, int n);

Permutation transposition_to_perm(const Transposition& t, int n);

/// Disjoint cycles of length >= 2 (fixed points omitted), sorted by minimum element.
std::vector<Cycle> cycle_decomposition(const Permutation& p);

/// All i with p(i) != i, ascending.
std::vector<int> support(const Permutation& p);

/// Parse one-line form: n integers separated by whitespace or commas,
/// optionally wrapped in a single pair of parentheses with commas.
Permutation parse_one_line(const std::string& text, int n);

/// Parse a product of parenthesized cycles, applied left-to-right as a product.
/// The empty string parses to the identity.
Permutation parse_cycles(const std::string& text, int n);

/// Auto-detect: cycle notation if the first non-space character is '(' and the
/// content looks like cycles (no commas), else one-line form.
Permutation parse_permutation(const std::string& text, int n);

std::string format_one_line(const Permutation& p);
std::string format_cycles(const Permutation& p);

} // namespace ytdist
