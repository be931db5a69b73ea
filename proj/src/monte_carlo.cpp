#include "wildfire/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

namespace wildfire {

namespace {

constexpr int kMaxBisections = 60;
constexpr double kTimeTolerance = 1e-9;
// Time scan resolution for fronts that are not nested in time.
constexpr int kPiriformScanSteps = 64;
constexpr std::size_t kHitOrMissBlock = 1 << 14;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

unsigned resolve_threads(unsigned requested, std::size_t work) {
    unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(work, 1)));
}

// Runs body(i) for i in [0, n). Each index writes only its own output slot,
// so the result does not depend on the thread count.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
    const unsigned workers = resolve_threads(threads, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) body(i);
        });
    }
}

double box_distance(const Box& box, Point2 p) {
    const double dx = std::max({box.x_min - p.x, 0.0, p.x - box.x_max});
    const double dy = std::max({box.y_min - p.y, 0.0, p.y - box.y_max});
    return std::hypot(dx, dy);
}

bool nested_in_time(FireModelKind kind) { return kind != FireModelKind::Piriform; }

// dist(x, K(t)) <= r, with cheap early outs.
bool reaches(const FireFront& front, const Box& front_box, Point2 x, double r) {
    if (box_distance(front_box, x) > r) return false;
    return distance_to(front, x) <= r;
}

bool reaches(const FireFront& front, Point2 x, double r) {
    return reaches(front, bounding_box(front), x, r);
}

double bisect_first_contact(const FireGrowthParams& growth, const Sensor& s, double lo, double hi) {
    for (int i = 0; i < kMaxBisections && hi - lo > kTimeTolerance; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (reaches(front_at(growth, mid), s.position, s.radius)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace

SimulationWindow auto_window(const FireGrowthParams& growth, const HybridRadiusModel& radius,
                             double t_max, double margin) {
    if (!(margin >= 0.0)) {
        throw ParameterError("auto_window: margin >= 0 violated");
    }
    const Box front_box = bounding_box(front_at(growth, t_max));
    const double reach = radius.outer();
    const double half_w = 0.5 * (front_box.width() + 2 * reach) * (1.0 + margin);
    const double half_h = 0.5 * (front_box.height() + 2 * reach) * (1.0 + margin);
    const double cx = 0.5 * (front_box.x_min + front_box.x_max);
    const double cy = 0.5 * (front_box.y_min + front_box.y_max);
    return {{cx - half_w, cx + half_w, cy - half_h, cy + half_h}};
}

std::uint64_t realization_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

BooleanRealization sample_realization(const FireScenario& scenario, const SimulationWindow& window,
                                      std::uint64_t seed) {
    if (!(scenario.density >= 0.0)) {
        throw ParameterError("sample_realization: lambda >= 0 violated");
    }
    const Box& box = window.bounds;
    if (!(box.width() >= 0.0 && box.height() >= 0.0)) {
        throw ParameterError("sample_realization: window must have non-negative extent");
    }
    BooleanRealization out;
    out.window = window;
    out.seed = seed;

    const double mean_count = scenario.density * box.area();
    if (mean_count <= 0.0) return out;

    Rng rng(seed);
    std::poisson_distribution<std::uint64_t> count_dist(mean_count);
    const std::uint64_t count = count_dist(rng);
    out.sensors.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        Sensor s;
        s.position.x = box.x_min + box.width() * uniform01(rng);
        s.position.y = box.y_min + box.height() * uniform01(rng);
        s.radius = sample_radius(scenario.radius, rng);
        out.sensors.push_back(s);
    }
    return out;
}

bool detected_at(const BooleanRealization& realization, const FireFront& front) {
    const Box front_box = bounding_box(front);
    return std::any_of(realization.sensors.begin(), realization.sensors.end(), [&](const Sensor& s) {
        return reaches(front, front_box, s.position, s.radius);
    });
}

std::size_t count_detectors(const BooleanRealization& realization, const FireFront& front) {
    const Box front_box = bounding_box(front);
    return static_cast<std::size_t>(
        std::count_if(realization.sensors.begin(), realization.sensors.end(),
                      [&](const Sensor& s) { return reaches(front, front_box, s.position, s.radius); }));
}

std::optional<double> detection_time(const BooleanRealization& realization,
                                     const FireGrowthParams& growth, double t_max) {
    if (!(t_max > 0.0)) {
        throw ParameterError("detection_time: t_max > 0 violated");
    }
    // Bounding boxes scale about the origin, which every box contains, so the
    // final box bounds every earlier front.
    const Box reach_box = bounding_box(front_at(growth, t_max));
    const bool nested = nested_in_time(growth.kind);

    std::optional<double> best;
    for (const Sensor& s : realization.sensors) {
        if (box_distance(reach_box, s.position) > s.radius) continue;
        if (std::hypot(s.position.x, s.position.y) <= s.radius) return 0.0;

        const double limit = best.value_or(t_max);
        if (nested) {
            if (!reaches(front_at(growth, limit), s.position, s.radius)) continue;
            best = bisect_first_contact(growth, s, 0.0, limit);
            continue;
        }
        double prev = 0.0;
        for (int k = 1; k <= kPiriformScanSteps; ++k) {
            const double t = limit * k / kPiriformScanSteps;
            if (reaches(front_at(growth, t), s.position, s.radius)) {
                best = bisect_first_contact(growth, s, prev, t);
                break;
            }
            prev = t;
        }
    }
    return best;
}

CoverageCurve estimate_sensing_probability(const FireScenario& scenario, std::span<const double> times,
                                           const MonteCarloOptions& options) {
    scenario.validate();
    if (options.realizations == 0) {
        throw ParameterError("estimate_sensing_probability: n_realizations >= 1 violated");
    }
    if (!std::is_sorted(times.begin(), times.end()) || (!times.empty() && times.front() < 0.0)) {
        throw ParameterError("estimate_sensing_probability: time grid must be sorted and non-negative");
    }

    CoverageCurve curve;
    curve.kind = CurveKind::Empirical;
    curve.realizations = options.realizations;
    curve.times.assign(times.begin(), times.end());
    if (times.empty()) return curve;

    const double t_max = std::max(times.back(), 1e-12);
    const SimulationWindow window =
        options.window.value_or(auto_window(scenario.growth, scenario.radius, t_max));

    std::vector<double> first_contact(options.realizations);
    parallel_for(options.realizations, options.threads, [&](std::size_t i) {
        const BooleanRealization field =
            sample_realization(scenario, window, realization_seed(options.seed, i));
        first_contact[i] = detection_time(field, scenario.growth, t_max)
                               .value_or(std::numeric_limits<double>::infinity());
    });
    std::sort(first_contact.begin(), first_contact.end());

    const double n = static_cast<double>(options.realizations);
    for (const double t : times) {
        const auto detected = std::upper_bound(first_contact.begin(), first_contact.end(), t) -
                              first_contact.begin();
        const double p = static_cast<double>(detected) / n;
        curve.probabilities.push_back(p);
        curve.stderrs.push_back(binomial_stderr(p, options.realizations));
    }
    return curve;
}

CoverageCurve estimate_sensing_probability(const FireScenario& scenario, std::span<const double> times,
                                           std::size_t realizations, std::uint64_t seed) {
    MonteCarloOptions options;
    options.realizations = realizations;
    options.seed = seed;
    return estimate_sensing_probability(scenario, times, options);
}

EmpiricalEstimate estimate_mean_detectors(const FireScenario& scenario, double t,
                                          const MonteCarloOptions& options) {
    scenario.validate();
    if (options.realizations == 0) {
        throw ParameterError("estimate_mean_detectors: n_realizations >= 1 violated");
    }
    const FireFront front = front_at(scenario.growth, t);
    const SimulationWindow window =
        options.window.value_or(auto_window(scenario.growth, scenario.radius, t));

    std::vector<double> counts(options.realizations);
    parallel_for(options.realizations, options.threads, [&](std::size_t i) {
        const BooleanRealization field =
            sample_realization(scenario, window, realization_seed(options.seed, i));
        counts[i] = static_cast<double>(count_detectors(field, front));
    });

    const double n = static_cast<double>(counts.size());
    double sum = 0.0;
    for (const double c : counts) sum += c;
    const double mean = sum / n;
    double ss = 0.0;
    for (const double c : counts) ss += (c - mean) * (c - mean);
    const double variance = counts.size() > 1 ? ss / (n - 1) : 0.0;
    return {mean, std::sqrt(variance / n), counts.size()};
}

EmpiricalEstimate estimate_dilated_area(const FireFront& front, const HybridRadiusModel& radius,
                                        std::size_t samples, std::uint64_t seed, unsigned threads) {
    front.validate();
    if (samples == 0) {
        throw ParameterError("estimate_dilated_area: n_samples >= 1 violated");
    }
    const Box front_box = bounding_box(front);
    const double reach = radius.outer();
    const Box box{front_box.x_min - reach, front_box.x_max + reach, front_box.y_min - reach,
                  front_box.y_max + reach};

    const std::size_t blocks = (samples + kHitOrMissBlock - 1) / kHitOrMissBlock;
    std::vector<std::size_t> hits(blocks, 0);
    parallel_for(blocks, threads, [&](std::size_t block) {
        Rng rng(realization_seed(seed, block));
        const std::size_t begin = block * kHitOrMissBlock;
        const std::size_t end = std::min(samples, begin + kHitOrMissBlock);
        std::size_t local = 0;
        for (std::size_t i = begin; i < end; ++i) {
            const Point2 p{box.x_min + box.width() * uniform01(rng),
                           box.y_min + box.height() * uniform01(rng)};
            const double r = sample_radius(radius, rng);
            if (reaches(front, front_box, p, r)) ++local;
        }
        hits[block] = local;
    });

    std::size_t total = 0;
    for (const std::size_t h : hits) total += h;
    const double fraction = static_cast<double>(total) / static_cast<double>(samples);
    return {box.area() * fraction, box.area() * binomial_stderr(fraction, samples), samples};
}

double binomial_stderr(double p, std::size_t n) {
    if (n == 0) return 0.0;
    return std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(n));
}

}  // namespace wildfire
