#include "novdist/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "novdist/errors.hpp"

namespace novdist {

ActionMetricSpec ActionMetricSpec::discrete() {
    ActionMetricSpec m;
    m.kind = MetricKind::Discrete;
    m.max_a = 1.0;
    return m;
}

ActionMetricSpec ActionMetricSpec::euclidean(std::vector<std::pair<double, double>> bounds) {
    if (bounds.empty()) throw SpecValidation("euclidean metric needs at least one dimension");
    double diam_sq = 0.0;
    for (const auto& [lo, hi] : bounds) {
        if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
            throw SpecValidation("euclidean metric bounds must be finite with lo < hi");
        diam_sq += (hi - lo) * (hi - lo);
    }
    ActionMetricSpec m;
    m.kind = MetricKind::Euclidean;
    m.bounds = std::move(bounds);
    m.max_a = std::sqrt(diam_sq);
    return m;
}

void ActionMetricSpec::validate_action(const ActionVector& a) const {
    if (a.empty()) throw InvalidAction("action vector must have at least one component");
    for (double c : a)
        if (!std::isfinite(c)) throw InvalidAction("action component is not finite");
    if (kind == MetricKind::Euclidean && a.size() != bounds.size())
        throw DimensionMismatch("action dimension does not match metric bounds");
}

bool ActionMetricSpec::compatible_with(const ActionMetricSpec& other) const {
    return kind == other.kind && bounds == other.bounds && max_a == other.max_a;
}

double ActionMetricSpec::action_distance(const ActionVector& a, const ActionVector& b) const {
    validate_action(a);
    validate_action(b);
    if (a.size() != b.size()) throw DimensionMismatch("action dimensions differ");
    if (kind == MetricKind::Discrete) return a == b ? 0.0 : 1.0;
    double sq = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) sq += (a[d] - b[d]) * (a[d] - b[d]);
    return std::sqrt(sq);
}

bool canonical_less(const Solution& a, const Solution& b) {
    std::size_t na = a.actions.size(), nb = b.actions.size();
    for (std::size_t i = 0; i < std::min(na, nb); ++i) {
        const auto& x = a.actions[i];
        const auto& y = b.actions[i];
        if (x != y) return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }
    return na < nb;
}

double solution_distance(const Solution& a, const Solution& b, const ActionMetricSpec& metric) {
    if (a.length() == 0 || b.length() == 0)
        throw LengthMismatch("solutions must contain at least one action");
    if (a.length() != b.length()) throw LengthMismatch("solutions have different lengths");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.length(); ++i)
        sum += metric.action_distance(a.actions[i], b.actions[i]);
    return sum / (static_cast<double>(a.length()) * metric.max_a);
}

PartitionedSolutionSpace partition_space(const std::vector<Solution>& solutions,
                                         const ActionMetricSpec& metric) {
    PartitionedSolutionSpace space;
    space.metric = metric;
    std::size_t dim = 0;
    for (const auto& s : solutions) {
        for (const auto& a : s.actions) {
            metric.validate_action(a);
            if (dim == 0) dim = a.size();
            if (a.size() != dim) throw DimensionMismatch("solutions mix action dimensions");
        }
        space.partitions[s.length()].push_back(s);
    }
    for (auto& [n, part] : space.partitions) {
        std::sort(part.begin(), part.end(), canonical_less);
        part.erase(std::unique(part.begin(), part.end()), part.end());
        space.total_size += part.size();
    }
    return space;
}

std::pair<double, double> partition_distance(const std::vector<Solution>& a_n,
                                             const std::vector<Solution>& b_n,
                                             std::pair<std::size_t, std::size_t> totals,
                                             const ActionMetricSpec& metric) {
    const std::size_t max_total = std::max(totals.first, totals.second);
    if (max_total == 0) {
        if (!a_n.empty() || !b_n.empty())
            throw InternalInvariantViolation("zero space totals with nonempty partitions");
        return {0.0, 0.0};
    }

    double matched_sum = 0.0;
    if (!a_n.empty() && !b_n.empty()) {
        // Source = smaller partition; on a size tie the canonically smaller
        // list, so matched_sum(A,B) == matched_sum(B,A).
        const std::vector<Solution>* src = &a_n;
        const std::vector<Solution>* dst = &b_n;
        bool swap = a_n.size() > b_n.size() ||
                    (a_n.size() == b_n.size() &&
                     std::lexicographical_compare(b_n.begin(), b_n.end(), a_n.begin(), a_n.end(),
                                                  canonical_less));
        if (swap) std::swap(src, dst);
        for (const auto& s : *src) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& t : *dst) best = std::min(best, solution_distance(s, t, metric));
            matched_sum += best;
        }
    }

    double size_term = static_cast<double>(a_n.size()) - static_cast<double>(b_n.size());
    double term = (size_term + matched_sum) / static_cast<double>(max_total);
    return {term, matched_sum};
}

DifficultyReport space_distance(const PartitionedSolutionSpace& a,
                                const PartitionedSolutionSpace& b,
                                NormalizationMode mode) {
    if (!a.metric.compatible_with(b.metric))
        throw DimensionMismatch("solution spaces use incompatible action metrics");
    if (a.empty() && b.empty())
        throw EmptySolutionSpaces("distance is undefined when both solution spaces are empty");

    const auto totals = std::make_pair(a.total_size, b.total_size);
    const double max_total = static_cast<double>(std::max(a.total_size, b.total_size));
    static const std::vector<Solution> kEmpty;

    DifficultyReport report;
    report.mode = mode;
    report.total_a = a.total_size;
    report.total_b = b.total_size;

    // Union of lengths, ascending, so the sum order is fixed.
    double sum = 0.0;
    auto ia = a.partitions.begin();
    auto ib = b.partitions.begin();
    while (ia != a.partitions.end() || ib != b.partitions.end()) {
        std::size_t n;
        const std::vector<Solution>* pa = &kEmpty;
        const std::vector<Solution>* pb = &kEmpty;
        if (ib == b.partitions.end() || (ia != a.partitions.end() && ia->first <= ib->first)) {
            n = ia->first;
            pa = &ia->second;
            if (ib != b.partitions.end() && ib->first == n) pb = &(ib++)->second;
            ++ia;
        } else {
            n = ib->first;
            pb = &(ib++)->second;
        }
        auto [term, matched] = partition_distance(*pa, *pb, totals, a.metric);
        report.per_partition.push_back({n, pa->size(), pb->size(), matched, term});
        if (mode == NormalizationMode::Literal)
            sum += term / max_total;
        else
            sum += (static_cast<double>(pa->size()) - static_cast<double>(pb->size()) + matched) /
                   max_total;
    }
    report.distance = sum;
    return report;
}

DifficultyClass classify_difficulty(double distance, const DifficultyThresholds& thresholds) {
    if (!std::isfinite(distance)) throw InvalidDistance("distance is not finite");
    if (!(thresholds.easy_max < thresholds.medium_max))
        throw SpecValidation("difficulty thresholds require easy_max < medium_max");
    if (distance <= thresholds.easy_max) return DifficultyClass::Easy;
    if (distance <= thresholds.medium_max) return DifficultyClass::Medium;
    return DifficultyClass::Hard;
}

const char* to_string(DifficultyClass c) {
    switch (c) {
        case DifficultyClass::Easy: return "Easy";
        case DifficultyClass::Medium: return "Medium";
        case DifficultyClass::Hard: return "Hard";
    }
    return "?";
}

const char* to_string(NormalizationMode m) {
    return m == NormalizationMode::Literal ? "literal" : "single";
}

const char* to_string(MetricKind k) {
    return k == MetricKind::Euclidean ? "euclidean" : "discrete";
}

}  // namespace novdist
