// Python bindings: a thin dict-returning layer over the same operations the
// CLI exposes.  The Classifier class owns one validated bundle + Selmer space
// so per-prime queries do not re-run the bundle verification.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "tame/bundle.hpp"
#include "tame/classify.hpp"
#include "tame/errors.hpp"
#include "tame/numeric.hpp"
#include "tame/quadfield.hpp"
#include "tame/scan.hpp"
#include "tame/selmer.hpp"

namespace py = pybind11;
using namespace tame;

namespace {

py::int_ py_int(const BigInt& z) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

BigInt to_bigint(const py::int_& v) {
    return parse_bigint(v.attr("__str__")().cast<std::string>());
}

const char* split_name(SplittingType s) {
    switch (s) {
        case SplittingType::SPLIT: return "SPLIT";
        case SplittingType::INERT: return "INERT";
        default: return "RAMIFIED";
    }
}

RootChoice parse_root(const std::string& r) {
    if (r == "canonical") return RootChoice::CANONICAL;
    if (r == "conjugate") return RootChoice::CONJUGATE;
    throw ConfigError("root must be 'canonical' or 'conjugate'");
}

py::dict record_dict(const ClassifiedPrime& c) {
    py::dict d;
    d["q"] = py_int(c.q);
    d["Nq"] = py_int(c.Nq);
    d["split_F"] = split_name(c.split_F);
    if (c.classified) {
        d["class"] = c.class_principal ? "principal" : "nonprincipal";
        d["d"] = c.d;
    } else {
        d["class"] = py::none();
        d["d"] = py::none();
    }
    d["verdict"] = verdict_name(c.verdict);
    d["rule"] = c.rule;
    if (c.has_tau) {
        d["tau"] = c.tau;
        d["tau_zero"] = c.tau_zero;
        d["psi_annihilated"] = c.psi_ann;
    }
    return d;
}

py::dict summary_dict(const ScanSummary& s) {
    py::dict d;
    d["q_bound"] = s.q_bound;
    d["total"] = s.total;
    py::dict vc;
    for (const auto& [name, count] : s.verdict_counts) vc[py::str(name)] = count;
    d["verdict_counts"] = vc;
    d["n_M"] = s.n_M;
    d["n_Mpp"] = s.n_Mpp;
    d["n_tau0"] = s.n_tau0;
    d["split_rational"] = s.split_rational;
    d["split_step3_rational"] = s.split_step3_rational;
    d["inert_step3"] = s.inert_step3;
    return d;
}

py::dict bounds_dict(const DensityBounds& b) {
    py::dict d;
    d["generic_bound"] = to_string(b.generic_bound);
    d["ratio_bound"] = to_string(b.ratio_bound);
    d["combined_bound"] = to_string(b.combined_bound);
    d["sharp_ratio_bound"] = to_string(b.sharp_ratio_bound);
    d["gov_index"] = b.gov_index;
    d["capit_dim"] = b.capit_dim;
    return d;
}

// Owns the validated arithmetic context for one (disc, p, bundle) triple.
class Classifier {
  public:
    Classifier(const py::int_& disc, unsigned p, const std::string& bundle_path,
               unsigned seed)
        : Q_(to_bigint(disc), p),
          space_(Q_, validate_bundle(Q_, load_bundle(bundle_path)), seed),
          bundle_path_(bundle_path) {}

    py::dict classify(const py::int_& q, const std::string& root, unsigned root_choice,
                      unsigned char_scale) const {
        return record_dict(classify_prime(Q_, space_, to_bigint(q), parse_root(root),
                                          root_choice, char_scale));
    }

    py::dict scan(uint64_t bound, unsigned jobs, const std::string& out,
                  const std::string& summary, bool return_records) const {
        ScanConfig cfg;
        cfg.disc = Q_.D();
        cfg.p = Q_.p();
        cfg.bound = bound;
        cfg.bundle_path = bundle_path_;
        cfg.out_path = out;
        cfg.summary_path = summary;
        cfg.jobs = jobs;
        std::pair<std::vector<ClassifiedPrime>, ScanSummary> r;
        {
            py::gil_scoped_release release;
            r = run_scan(Q_, space_, cfg);
        }
        if (!out.empty() || !summary.empty()) {
            if (out.empty() || summary.empty())
                throw ConfigError("scan needs both out and summary paths, or neither");
            std::ostringstream text;
            emit_reports(r.first, r.second, density_bounds(Q_, space_), cfg, text);
        }
        py::dict d;
        d["summary"] = summary_dict(r.second);
        if (return_records) {
            py::list recs;
            for (const auto& c : r.first) recs.append(record_dict(c));
            d["records"] = recs;
        }
        return d;
    }

    py::dict bounds() const { return bounds_dict(density_bounds(Q_, space_)); }

    py::dict validated() const {
        const ValidatedBundle& vb = space_.bundle();
        py::dict d;
        d["r_F1"] = vb.r_F1;
        d["n_V"] = vb.n_V;
        d["delta_F1"] = vb.data.delta_F1;
        d["cl_p_rank"] = vb.data.cl_p_rank;
        d["tower_terminates"] = vb.data.tower_terminates;
        py::list bad;
        for (const BigInt& q : vb.bad_primes) bad.append(py_int(q));
        d["bad_primes"] = bad;
        return d;
    }

    unsigned frobenius_choices(const py::int_& q) const {
        return space_.frobenius_choices(to_bigint(q));
    }

    std::vector<unsigned> frobenius_vector(const py::int_& q, unsigned choice,
                                           unsigned char_scale) const {
        return space_.frobenius_vector(to_bigint(q), choice, char_scale);
    }

  private:
    QuadField Q_;
    SelmerSpace space_;
    std::string bundle_path_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Tame Galois group classification over imaginary quadratic fields";

    py::register_exception<Error>(m, "TameError");

    m.def(
        "is_prime", [](const py::int_& n) { return is_prime(to_bigint(n)); },
        py::arg("n"), "Deterministic primality test.");

    m.def(
        "class_group",
        [](const py::int_& disc, py::object p) {
            QuadClassGroup cl(to_bigint(disc));
            py::dict d;
            d["D"] = py_int(cl.D());
            d["h"] = cl.h();
            py::list forms;
            for (const QuadForm& f : cl.forms()) {
                py::list row;
                row.append(f.a);
                row.append(f.b);
                row.append(f.c);
                forms.append(row);
            }
            d["forms"] = forms;
            if (!p.is_none()) {
                unsigned pp = p.cast<unsigned>();
                d["p_part_order"] = cl.p_part_order(pp);
                d["p_part_cyclic"] = cl.p_part_cyclic(pp);
            }
            return d;
        },
        py::arg("disc"), py::arg("p") = py::none(),
        "Reduced forms and class number of a fundamental discriminant < 0.");

    m.def(
        "splitting_type",
        [](const py::int_& disc, unsigned p, const py::int_& q) {
            QuadField Q(to_bigint(disc), p);
            return std::string(split_name(splitting_type(Q, to_bigint(q))));
        },
        py::arg("disc"), py::arg("p"), py::arg("q"),
        "SPLIT / INERT / RAMIFIED for a rational prime q.");

    py::class_<Classifier>(m, "Classifier",
                           "Validated (disc, p, bundle) context for prime "
                           "classification and density scans.")
        .def(py::init<const py::int_&, unsigned, const std::string&, unsigned>(),
             py::arg("disc"), py::arg("p"), py::arg("bundle_path"), py::arg("seed") = 0)
        .def("classify", &Classifier::classify, py::arg("q"),
             py::arg("root") = "canonical", py::arg("root_choice") = 0,
             py::arg("char_scale") = 1,
             "Classify one rational prime; returns the record as a dict.")
        .def("scan", &Classifier::scan, py::arg("bound"), py::arg("jobs") = 1,
             py::arg("out") = std::string(), py::arg("summary") = std::string(),
             py::arg("return_records") = false,
             "Classify every prime up to bound; returns the summary (and "
             "optionally all records), writing report files when paths are given.")
        .def("bounds", &Classifier::bounds,
             "Exact density bounds as rational strings plus the governing index.")
        .def("validated", &Classifier::validated,
             "Re-verified bundle bookkeeping: ranks, bad primes, tower flag.")
        .def("frobenius_choices", &Classifier::frobenius_choices, py::arg("q"))
        .def("frobenius_vector", &Classifier::frobenius_vector, py::arg("q"),
             py::arg("choice") = 0, py::arg("char_scale") = 1);
}
