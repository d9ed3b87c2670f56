#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "essalg/findim.hpp"
#include "essalg/nc.hpp"

namespace essalg {

inline constexpr std::uint64_t kPointTupleBudget = 10'000'000;

struct PointFlags {
    bool unital_only = true;  // maps preserving the unit of a unital source
    bool commutative = false; // require pairwise commuting images (factor through the
                              // abelianization)
};

/// The set of algebra maps from a presented source into a finite-dimensional
/// target over a small prime field, found by exhaustive search. Each map is
/// the tuple of generator images; when a unital source is enumerated in the
/// nonunital category the image of the unit is one extra trailing slot.
struct PointSet {
    Field field;
    std::size_t ngens = 0;
    bool has_unit_slot = false;
    PointFlags flags;
    std::uint64_t total_tuples = 0;
    std::vector<std::vector<std::vector<Scalar>>> homs;  // per map: per slot: coordinates

    std::size_t slots() const { return ngens + (has_unit_slot ? 1 : 0); }
};

namespace detail {

inline std::vector<Scalar> eval_nc_at(const NCPolynomial& p,
                                      const std::vector<std::vector<Scalar>>& images,
                                      const std::vector<Scalar>* unit_elem,
                                      const FinDimAlgebra& B) {
    std::vector<Scalar> acc(B.dim(), Scalar::zero(B.field));
    for (const auto& [w, c] : p.terms) {
        std::vector<Scalar> v;
        if (w.empty()) {
            v = *unit_elem;
        } else {
            v = images[w[0]];
            for (std::size_t i = 1; i < w.size(); ++i) v = B.mult_vec(v, images[w[i]]);
        }
        for (std::size_t t = 0; t < v.size(); ++t) acc[t] = acc[t] + c * v[t];
    }
    return acc;
}

inline bool vec_is_zero(const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace detail

inline PointSet enumerate_homs(const NCPresentation& A, const FinDimAlgebra& B, PointFlags flags,
                               std::uint64_t tuple_budget = kPointTupleBudget) {
    if (!(A.field == B.field)) throw InputError("source and target must share the base field");
    if (A.field.is_rationals() || (A.field.p != 2 && A.field.p != 3 && A.field.p != 5))
        throw InputError("point enumeration runs over F2, F3, or F5 targets");
    if (flags.unital_only && !A.unital)
        throw InputError("unit-preserving enumeration needs a unital source");

    PointSet ps;
    ps.field = A.field;
    ps.ngens = A.gens.size();
    ps.has_unit_slot = A.unital && !flags.unital_only;
    ps.flags = flags;

    const std::size_t m = B.dim();
    const std::size_t coords = m * ps.slots();
    const std::uint64_t q = A.field.p;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < coords; ++i) {
        if (total > tuple_budget / q + 1) throw ResourceError("points", "tuple space too large");
        total *= q;
        if (total > tuple_budget)
            throw ResourceError("points", "tuple space exceeds the enumeration budget");
    }
    ps.total_tuples = total;

    std::vector<std::uint32_t> digits(coords, 0);
    std::vector<std::vector<Scalar>> images(ps.ngens, std::vector<Scalar>(m));
    std::vector<Scalar> unit_img(m);
    const std::vector<Scalar>* unit_elem = nullptr;

    for (std::uint64_t it = 0; it < total; ++it) {
        std::uint64_t rem = it;
        for (std::size_t i = 0; i < coords; ++i) {  // first coordinate most significant
            digits[coords - 1 - i] = static_cast<std::uint32_t>(rem % q);
            rem /= q;
        }
        for (std::size_t g = 0; g < ps.ngens; ++g)
            for (std::size_t t = 0; t < m; ++t)
                images[g][t] = Scalar::fp(digits[g * m + t], A.field.p);
        if (ps.has_unit_slot) {
            for (std::size_t t = 0; t < m; ++t)
                unit_img[t] = Scalar::fp(digits[ps.ngens * m + t], A.field.p);
            unit_elem = &unit_img;
        } else if (A.unital) {
            unit_elem = &B.unit;
        }

        bool ok = true;
        if (ps.has_unit_slot) {
            ok = B.mult_vec(unit_img, unit_img) == unit_img;
            for (std::size_t g = 0; g < ps.ngens && ok; ++g)
                ok = B.mult_vec(unit_img, images[g]) == images[g] &&
                     B.mult_vec(images[g], unit_img) == images[g];
        }
        if (ok && flags.commutative)
            for (std::size_t a = 0; a < ps.ngens && ok; ++a)
                for (std::size_t b = a + 1; b < ps.ngens && ok; ++b)
                    ok = B.mult_vec(images[a], images[b]) == B.mult_vec(images[b], images[a]);
        for (std::size_t r = 0; r < A.relations.size() && ok; ++r)
            ok = detail::vec_is_zero(detail::eval_nc_at(A.relations[r], images, unit_elem, B));
        if (!ok) continue;

        std::vector<std::vector<Scalar>> hom = images;
        if (ps.has_unit_slot) hom.push_back(unit_img);
        ps.homs.push_back(std::move(hom));
    }
    return ps;
}

/// Re-run the relation checks on every stored map; used by report replay.
inline bool point_set_replays(const NCPresentation& A, const FinDimAlgebra& B,
                              const PointSet& ps) {
    for (const auto& hom : ps.homs) {
        std::vector<std::vector<Scalar>> images(hom.begin(),
                                                hom.begin() + static_cast<std::ptrdiff_t>(ps.ngens));
        const std::vector<Scalar>* unit_elem = nullptr;
        if (ps.has_unit_slot)
            unit_elem = &hom.back();
        else if (A.unital)
            unit_elem = &B.unit;
        for (const auto& r : A.relations)
            if (!detail::vec_is_zero(detail::eval_nc_at(r, images, unit_elem, B))) return false;
    }
    return true;
}

namespace detail {

/// Canonical integer key: generator images then the unit image (explicit
/// slot, or the target's unit for unit-preserving maps).
inline std::vector<std::uint32_t> point_key(const std::vector<std::vector<Scalar>>& hom,
                                            const PointSet& ps, const FinDimAlgebra& B) {
    std::vector<std::uint32_t> key;
    key.reserve((ps.ngens + 1) * B.dim());
    for (std::size_t g = 0; g < ps.ngens; ++g)
        for (const auto& s : hom[g]) key.push_back(s.fp_value());
    const std::vector<Scalar>& u = ps.has_unit_slot ? hom.back() : B.unit;
    for (const auto& s : u) key.push_back(s.fp_value());
    return key;
}

}  // namespace detail

enum class PointRelation { Equal, FirstInSecond, SecondInFirst, Incomparable };

inline std::string point_relation_str(PointRelation r) {
    switch (r) {
        case PointRelation::Equal: return "equal";
        case PointRelation::FirstInSecond: return "first-strictly-inside-second";
        case PointRelation::SecondInFirst: return "second-strictly-inside-first";
        default: return "incomparable";
    }
}

/// Containment report between two enumerations of the same source under
/// different flags. Maps are compared on generator images plus unit image.
struct PointComparison {
    PointSet first;
    PointSet second;
    PointRelation relation = PointRelation::Equal;
    std::vector<std::vector<std::uint32_t>> only_first;
    std::vector<std::vector<std::uint32_t>> only_second;
    bool zero_map_in_difference = false;
};

inline PointComparison compare_point_sets(const NCPresentation& A, const FinDimAlgebra& B,
                                          PointFlags flags1, PointFlags flags2,
                                          std::uint64_t tuple_budget = kPointTupleBudget) {
    PointComparison out;
    out.first = enumerate_homs(A, B, flags1, tuple_budget);
    out.second = enumerate_homs(A, B, flags2, tuple_budget);

    std::vector<std::vector<std::uint32_t>> k1, k2;
    for (const auto& h : out.first.homs) k1.push_back(detail::point_key(h, out.first, B));
    for (const auto& h : out.second.homs) k2.push_back(detail::point_key(h, out.second, B));
    std::sort(k1.begin(), k1.end());
    std::sort(k2.begin(), k2.end());
    std::set_difference(k1.begin(), k1.end(), k2.begin(), k2.end(),
                        std::back_inserter(out.only_first));
    std::set_difference(k2.begin(), k2.end(), k1.begin(), k1.end(),
                        std::back_inserter(out.only_second));
    if (out.only_first.empty() && out.only_second.empty())
        out.relation = PointRelation::Equal;
    else if (out.only_first.empty())
        out.relation = PointRelation::FirstInSecond;
    else if (out.only_second.empty())
        out.relation = PointRelation::SecondInFirst;
    else
        out.relation = PointRelation::Incomparable;

    auto zero_key = [&](const std::vector<std::uint32_t>& k) {
        return std::all_of(k.begin(), k.end(), [](std::uint32_t v) { return v == 0; });
    };
    for (const auto& k : out.only_first) out.zero_map_in_difference |= zero_key(k);
    for (const auto& k : out.only_second) out.zero_map_in_difference |= zero_key(k);
    return out;
}

}  // namespace essalg
