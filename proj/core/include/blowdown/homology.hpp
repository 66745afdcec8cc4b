#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace blowdown {

// Class in H_2 of CP^2 blown up k times, written over the basis
// {h, e_1, ..., e_k} with the diagonal pairing h.h = +1, e_i.e_i = -1.
class HomologyClass {
public:
    HomologyClass() = default;
    HomologyClass(std::int64_t h, std::vector<std::int64_t> e) : h_(h), e_(std::move(e)) {}

    static HomologyClass hyperplane(std::int64_t multiple = 1) { return HomologyClass(multiple, {}); }
    static HomologyClass exceptional(int index);

    std::int64_t h() const { return h_; }
    std::int64_t e(int index) const; // 1-based; 0 beyond stored length
    int max_index() const { return static_cast<int>(e_.size()); }

    void subtract_exceptional(int index);

    std::int64_t pair(const HomologyClass& other) const;
    std::int64_t self_intersection() const { return pair(*this); }

    HomologyClass operator-(const HomologyClass& other) const;
    HomologyClass operator+(const HomologyClass& other) const;
    bool equals(const HomologyClass& other) const;

    std::string to_string() const;

private:
    std::int64_t h_ = 0;
    std::vector<std::int64_t> e_; // e_[i] multiplies e_{i+1}
};

// PD of the canonical class on CP^2 # k CP^2bar: -3h + e_1 + ... + e_k.
HomologyClass canonical_class(int k);

// K.c + c.c for spheres must equal -2.
std::int64_t adjunction_defect(const HomologyClass& c, int k);

} // namespace blowdown
