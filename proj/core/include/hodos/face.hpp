#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

namespace hodos {

// Canonical face: strictly increasing vertex ids. The type (side set) of a
// face in a partite complex is derived from the owning Complex, not stored.
struct Face {
    std::vector<int> elements;

    Face() = default;
    explicit Face(std::vector<int> elems) : elements(std::move(elems)) {
        std::sort(elements.begin(), elements.end());
    }

    int size() const { return static_cast<int>(elements.size()); }
    bool empty() const { return elements.empty(); }

    bool contains(int v) const {
        return std::binary_search(elements.begin(), elements.end(), v);
    }

    bool contains(const Face& other) const {
        return std::includes(elements.begin(), elements.end(),
                             other.elements.begin(), other.elements.end());
    }

    Face united(const Face& other) const {
        Face out;
        std::set_union(elements.begin(), elements.end(), other.elements.begin(),
                       other.elements.end(), std::back_inserter(out.elements));
        return out;
    }

    Face united(int v) const {
        Face out = *this;
        out.elements.insert(
            std::lower_bound(out.elements.begin(), out.elements.end(), v), v);
        return out;
    }

    Face minus(const Face& other) const {
        Face out;
        std::set_difference(elements.begin(), elements.end(),
                            other.elements.begin(), other.elements.end(),
                            std::back_inserter(out.elements));
        return out;
    }

    auto operator<=>(const Face&) const = default;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : f.elements) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace hodos
