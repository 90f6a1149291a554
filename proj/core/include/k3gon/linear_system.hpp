#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "k3gon/enumeration.hpp"
#include "k3gon/lattice.hpp"

namespace k3gon {

struct Budget {
    /// Largest A-degree a root or elliptic search may be asked to cover.
    Int max_degree = 100'000;
    /// Lattice points a single enumeration may visit.
    std::uint64_t candidate_budget = 10'000'000;

    EnumLimits limits() const { return {candidate_budget}; }
};

class DatumError : public Error {
public:
    enum class Kind {
        AmpleNotPositive,
        RootOrthogonalToAmple,
        PolarizationNotBig,
        PolarizationNotNef,
        PolarizationNotBpf,
    };

    DatumError(Kind kind, const std::string& detail, std::optional<DivClass> witness = {});
    Kind kind() const { return kind_; }
    const std::optional<DivClass>& witness() const { return witness_; }

private:
    Kind kind_;
    std::optional<DivClass> witness_;
};

const char* kind_name(DatumError::Kind kind);

/// A lattice with a declared ample class A and a big, nef, base point free
/// polarization L.
///
/// A root is called effective when it has positive A-degree. The datum
/// precomputes the effective roots up to a fixed A-degree, sorted by
/// (A-degree, coordinates); larger degrees are enumerated on demand.
class PolarizedDatum {
public:
    static PolarizedDatum validate(Lattice lat, DivClass ample, DivClass L, Budget budget = {});

    const Lattice& lattice() const { return *lat_; }
    const DivClass& ample() const { return ample_; }
    const DivClass& polarization() const { return L_; }
    const Budget& budget() const { return budget_; }

    Int degree(const DivClass& x) const { return lat_->pair(x, ample_); }

    /// Read-only window onto a sorted root list.
    class RootView {
    public:
        RootView(std::shared_ptr<const std::vector<DivClass>> store, std::size_t count)
            : store_(std::move(store)), count_(count) {}
        auto begin() const { return store_->begin(); }
        auto end() const { return store_->begin() + static_cast<std::ptrdiff_t>(count_); }
        std::size_t size() const { return count_; }
        bool empty() const { return count_ == 0; }
        std::vector<DivClass> to_vector() const { return {begin(), end()}; }

    private:
        std::shared_ptr<const std::vector<DivClass>> store_;
        std::size_t count_;
    };

    /// Effective roots with A-degree <= max_degree, in (A-degree, lex) order.
    RootView effective_roots(Int max_degree) const;

    Int cached_root_degree() const { return cached_degree_; }

private:
    PolarizedDatum(std::shared_ptr<const Lattice> lat, DivClass ample, DivClass L, Budget budget);

    std::shared_ptr<const Lattice> lat_;
    DivClass ample_;
    DivClass L_;
    Budget budget_;
    Int cached_degree_ = 0;
    std::shared_ptr<const std::vector<DivClass>> root_cache_;
};

inline PolarizedDatum validate_datum(Lattice lat, DivClass ample, DivClass L, Budget budget = {}) {
    return PolarizedDatum::validate(std::move(lat), std::move(ample), std::move(L), budget);
}

/// Boolean verdict with an optional certificate of failure.
struct Witnessed {
    bool holds = true;
    std::optional<DivClass> witness;

    explicit operator bool() const { return holds; }
};

/// Largest A-degree an effective root Delta with Delta.x < 0 can have when
/// x^2 > 0 and x.A > 0.
///
/// Splitting Delta and x along A and applying Cauchy-Schwarz in the negative
/// definite complement A-perp gives (Delta.A)^2 x^2 < 2((x.A)^2 - x^2 A^2).
/// Returns std::nullopt when the hypotheses fail.
std::optional<Int> hodge_wall_bound(const Lattice& lat, const DivClass& A, const DivClass& x);

/// A-degree window in which a witness of non-nefness must exist, if any.
/// For x^2 > 0 this is the Hodge bound. For x^2 <= 0 it is x.A: an effective x
/// that is not nef contains a (-2)-curve Gamma with Gamma.x < 0 as a fixed
/// component, hence Gamma.A <= x.A.
Int wall_degree_bound(const DivClass& x, const PolarizedDatum& datum);

/// First effective root (in (A-degree, lex) order) with Delta.x < 0 and
/// Delta.A <= max_degree.
std::optional<DivClass> first_negative_root(const DivClass& x, const PolarizedDatum& datum,
                                            Int max_degree);

Witnessed is_nef(const DivClass& x, const PolarizedDatum& datum);
Witnessed is_base_point_free(const DivClass& x, const PolarizedDatum& datum);
Witnessed is_ample(const DivClass& x, const PolarizedDatum& datum);

/// Result of stripping (-2)-curves off a class: the moving part (if the class
/// is effective) and the roots removed along the way.
struct WeylReduction {
    DivClass reduced;
    std::vector<DivClass> removed;
    bool effective = true;
};

/// Repeatedly subtracts the first effective root Delta with Delta.x < 0 until
/// the class is nef or leaves the effective cone.
WeylReduction weyl_reduce(const DivClass& x, const PolarizedDatum& datum);

Int h0(const DivClass& x, const PolarizedDatum& datum);

/// h0(x) + h0(-x) - (x^2/2 + 2).
Int h1(const DivClass& x, const PolarizedDatum& datum);

/// True iff no effective root Delta has Delta.x <= -2. For x^2 < 0 only roots
/// of A-degree <= x.A are checked, and x.A > 0 is required.
Witnessed h1_vanishing_root_test(const DivClass& x, const PolarizedDatum& datum);

}  // namespace k3gon
