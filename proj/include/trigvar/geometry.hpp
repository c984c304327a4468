#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "trigvar/conversion.hpp"
#include "trigvar/groebner.hpp"

namespace trigvar {

// (2,0,0) parametrizations of the generalized epicycloid / hypocycloid in t1, t2.
// Epicycloid: 0 < r <= R; hypocycloid: 0 < r < R.
HybridParam epicycloid(const Rational& R, const Rational& r);
HybridParam hypocycloid(const Rational& R, const Rational& r);

struct ParamRange {
    double lo = 0, hi = 1;
    unsigned count = 2;  // grid points, endpoints included
};

struct PointCloud {
    unsigned dim = 0;
    std::vector<std::vector<double>> params;     // parameter values per kept point
    std::vector<std::vector<double>> points;
    std::vector<std::vector<double>> residuals;  // per point, one per check polynomial (empty without check)
    std::size_t skipped = 0;                     // grid points dropped at poles
    double max_residual() const;
};

using Evaluator = std::function<std::vector<double>(const std::vector<double>&)>;

// Uniform grid evaluation; pole points (PoleAtPoint or non-finite values) are skipped.
// Worker count: `threads`, or TRIGVAR_THREADS, or the hardware concurrency. Output order is
// the grid order regardless of threading.
PointCloud sample(const Evaluator& f, const std::vector<ParamRange>& ranges, const Ideal* check = nullptr,
                  unsigned threads = 0);
PointCloud sample(const HybridParam& p, const std::vector<ParamRange>& ranges, const Ideal* check = nullptr,
                  unsigned threads = 0);
PointCloud sample(const PureParam& p, const std::vector<ParamRange>& ranges, const Ideal* check = nullptr,
                  unsigned threads = 0);
PointCloud sample(const RationalParam& p, const std::vector<ParamRange>& ranges, const Ideal* check = nullptr,
                  unsigned threads = 0);

// |h(x)| / max(1, sum |c x^e|).
double relative_residual(const MultiPoly& h, const std::vector<double>& x);

std::string to_csv(const PointCloud& cloud);
nlohmann::json to_json(const PointCloud& cloud);

// Numerator of the canonical h(P), primitive with positive leading coefficient.
MultiPoly intersect_condition(const RationalParam& p, const MultiPoly& h);
// Numerator of h(F) reduced modulo the torus relations (sin-like above cos-like), primitive.
MultiPoly intersect_condition_trig(const PureParam& p, const MultiPoly& h);

struct IsolatedRoot {
    Rational lo, hi;  // lo == hi for an exact rational root; otherwise the root lies in (lo, hi)
    double approx = 0;
    unsigned multiplicity = 1;
    Rational width() const { return hi - lo; }
};

// Distinct real roots of a univariate polynomial (at most one variable used), isolated by
// Sturm sequences on the squarefree part and refined by bisection to `width`.
std::vector<IsolatedRoot> isolate_real_roots(const MultiPoly& p, const Rational& width);
// Number of distinct real roots by the Sturm count over the whole line.
std::size_t count_real_roots(const MultiPoly& p);

nlohmann::json to_json(const std::vector<IsolatedRoot>& roots);

}  // namespace trigvar
