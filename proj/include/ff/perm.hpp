// Permutation value type: fixed-degree bijection of {1..degree}, stored
// 0-based internally. Composition is left-to-right: x^(a*b) = (x^a)^b.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ff {

using Point = std::uint16_t;

class Permutation {
public:
    Permutation() = default;

    // Takes 0-based images; throws std::invalid_argument if not a bijection.
    explicit Permutation(std::vector<Point> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (Point p : img_) {
            if (p >= img_.size() || seen[p])
                throw std::invalid_argument("permutation images are not a bijection");
            seen[p] = true;
        }
    }

    static Permutation identity(std::size_t degree) {
        std::vector<Point> v(degree);
        std::iota(v.begin(), v.end(), Point{0});
        Permutation g;
        g.img_ = std::move(v);
        return g;
    }

    std::size_t degree() const { return img_.size(); }
    Point operator[](Point p) const { return img_[p]; }
    const std::vector<Point>& images() const { return img_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    // this * other = "apply this, then other".
    Permutation operator*(const Permutation& other) const {
        Permutation r;
        r.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i)
            r.img_[i] = other.img_[img_[i]];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i)
            r.img_[img_[i]] = static_cast<Point>(i);
        return r;
    }

    // g^h = h^-1 g h.
    Permutation conjugated_by(const Permutation& h) const {
        Permutation r;
        r.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i)
            r.img_[h.img_[i]] = h.img_[img_[i]];
        return r;
    }

    std::uint64_t order() const {
        std::vector<bool> seen(img_.size(), false);
        std::uint64_t o = 1;
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            std::uint64_t len = 0;
            for (std::size_t j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                ++len;
            }
            o = std::lcm(o, len);
        }
        return o;
    }

    // Cycle type as (length -> count), fixed points included.
    std::map<std::uint64_t, std::uint64_t> cycle_type() const {
        std::vector<bool> seen(img_.size(), false);
        std::map<std::uint64_t, std::uint64_t> ct;
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            std::uint64_t len = 0;
            for (std::size_t j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                ++len;
            }
            ++ct[len];
        }
        return ct;
    }

    // Smallest point moved, or degree() if identity.
    std::size_t smallest_moved() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return i;
        return img_.size();
    }

    Permutation power(std::int64_t e) const {
        std::uint64_t o = order();
        std::uint64_t k = static_cast<std::uint64_t>(((e % static_cast<std::int64_t>(o)) + static_cast<std::int64_t>(o))) % o;
        Permutation r = identity(degree());
        Permutation b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

    // Cycle notation, 1-based, fixed points omitted; "()" for the identity.
    std::string to_cycles() const;

private:
    std::vector<Point> img_;
};

struct PermHash {
    std::size_t operator()(const Permutation& g) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (Point p : g.images()) {
            h ^= p;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

inline Permutation commutator(const Permutation& a, const Permutation& b) {
    return a.inverse() * b.inverse() * a * b;
}

// Parses 1-based cycle notation ("(1 2 3)(4 5)", "()" for identity).
Permutation parse_cycles(std::size_t degree, const std::string& text);

} // namespace ff
