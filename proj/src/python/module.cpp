#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ffvar/apstats.hpp"
#include "ffvar/experiment.hpp"
#include "ffvar/rmt.hpp"

namespace py = pybind11;
using namespace ffvar;

namespace {

Fq fq_of(std::uint32_t q) {
    for (std::uint32_t p = 3; p <= q; p += 2) {
        if (!is_prime_u64(p) || q % p) continue;
        std::uint32_t m = q;
        int e = 0;
        while (m % p == 0) m /= p, ++e;
        if (m == 1) return make_fq(p, e);
        break;
    }
    throw config_error("q must be an odd prime power");
}

CurveFamily curve_of(const Fq& fq, const std::string& name) {
    if (name == "legendre") return legendre_curve(fq);
    if (name == "genus2") return genus2_curve(fq);
    throw config_error("unknown curve: " + name);
}

}  // namespace

PYBIND11_MODULE(_ffvar, m) {
    m.doc() = "function-field L-functions, progression variance, matrix moments";
    m.attr("__version__") = kVersion;

    m.def("traces", [](std::uint32_t q, const std::string& curve, int degree) {
        Fq fq = fq_of(q);
        CurveFamily c = curve_of(fq, curve);
        FqExt ext(fq, degree);
        return a_trace_batch(c, ext, ext.size() > 2048);
    }, py::arg("q"), py::arg("curve"), py::arg("degree"),
       "Frobenius traces a(t0) over GF(q^degree), in canonical element order");

    m.def("euler_factor", [](std::uint32_t q, const std::string& curve,
                             const std::vector<long long>& pi) {
        Fq fq = fq_of(q);
        CurveFamily c = curve_of(fq, curve);
        EulerFactor ef = euler_factor(fq, c, poly_from_ints(fq, pi));
        py::dict d;
        d["pi"] = poly_to_string(fq, ef.pi);
        d["degree"] = ef.degree;
        d["coeffs"] = ef.coeffs;
        d["traces"] = ef.traces;
        return d;
    }, py::arg("q"), py::arg("curve"), py::arg("pi"));

    m.def("von_mangoldt", [](std::uint32_t q, const std::string& curve,
                             const std::vector<long long>& f) {
        Fq fq = fq_of(q);
        return von_mangoldt(fq, curve_of(fq, curve), poly_from_ints(fq, f));
    }, py::arg("q"), py::arg("curve"), py::arg("f"));

    m.def("lfun", [](std::uint32_t q, const std::string& curve,
                     const std::vector<long long>& Q, int threads) {
        Fq fq = fq_of(q);
        CurveFamily c = curve_of(fq, curve);
        Poly Qp = poly_from_ints(fq, Q);
        ResidueGroup group(fq, Qp);
        ReductionProfile prof = reduction_profile(fq, c, Qp);
        TraceTable table = build_trace_table(fq, c, prof.R);
        auto entries = weighted_entries_curve(group, table, prof.R);
        auto results = lfun_all_characters(group, entries, prof.R, c.weight, threads);
        py::list out;
        for (const auto& L : results) {
            py::dict d;
            d["chi_index"] = L.chi_index;
            d["coeffs"] = L.coeffs;
            d["roots"] = L.roots;
            d["class"] = L.cls == Purity::good ? "good"
                         : L.cls == Purity::mixed ? "mixed" : "heavy";
            d["theta"] = L.theta;
            out.append(std::move(d));
        }
        return out;
    }, py::arg("q"), py::arg("curve"), py::arg("Q"), py::arg("threads") = 1);

    m.def("variance", [](std::uint32_t q, const std::string& curve,
                         const std::vector<long long>& Q, int n) {
        Fq fq = fq_of(q);
        py::dict d;
        if (curve == "classical") {
            ResidueGroup group(fq, poly_from_ints(fq, Q));
            VarianceReport r = variance_report_classical(fq, group, n);
            d["n"] = r.n; d["phi"] = r.phi; d["mean"] = r.mean;
            d["variance"] = r.variance_brute; d["spectral"] = r.variance_spectral;
            d["normalized"] = r.normalized; d["prediction"] = r.prediction;
            return d;
        }
        CurveFamily c = curve_of(fq, curve);
        Poly Qp = poly_from_ints(fq, Q);
        ResidueGroup group(fq, Qp);
        ReductionProfile prof = reduction_profile(fq, c, Qp);
        TraceTable table = build_trace_table(fq, c, n);
        VarianceReport r = variance_report_curve(group, table, n, prof.R);
        d["n"] = r.n; d["phi"] = r.phi; d["mean"] = r.mean;
        d["variance"] = r.variance_brute; d["spectral"] = r.variance_spectral;
        d["normalized"] = r.normalized; d["prediction"] = r.prediction;
        d["R"] = prof.R;
        return d;
    }, py::arg("q"), py::arg("curve"), py::arg("Q"), py::arg("n"));

    m.def("trace_moments", [](int dim, int n_max, std::uint64_t samples, std::uint64_t seed,
                              int threads) {
        py::list out;
        for (const auto& e : trace_moments(dim, n_max, samples, seed, threads)) {
            py::dict d;
            d["R"] = e.dim; d["n"] = e.n; d["estimate"] = e.estimate;
            d["std_error"] = e.std_error; d["prediction"] = e.prediction;
            out.append(std::move(d));
        }
        return out;
    }, py::arg("dim"), py::arg("n_max"), py::arg("samples"), py::arg("seed") = 1,
       py::arg("threads") = 1);

    m.def("selftest", [] {
        std::ostringstream os;
        bool ok = run_selftest(os);
        return py::make_tuple(ok, os.str());
    });
}
