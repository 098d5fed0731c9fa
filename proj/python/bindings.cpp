#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "duadic/bounds.hpp"
#include "duadic/cosets.hpp"
#include "duadic/cyclic.hpp"
#include "duadic/distance.hpp"
#include "duadic/gf2poly.hpp"

namespace py = pybind11;
using namespace duadic;

namespace {

std::vector<Residue> members(const DefiningSet& s) { return {s.members().begin(), s.members().end()}; }

std::vector<std::size_t> exponents(const BinaryPolynomial& p) {
    std::vector<std::size_t> out;
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coefficient(static_cast<std::size_t>(i))) out.push_back(static_cast<std::size_t>(i));
    return out;
}

ParityFilter parity_from(const std::string& s) {
    if (s == "all") return ParityFilter::kAll;
    if (s == "odd") return ParityFilter::kOddOnly;
    throw py::value_error("parity must be 'all' or 'odd'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Binary cyclic codes from base-2 weight classes";

    py::class_<FieldContext>(m, "FieldContext")
        .def(py::init<int>(), py::arg("m"))
        .def(py::init([](int deg, const std::string& modulus_hex) { return FieldContext(deg, BinaryPolynomial::from_hex(modulus_hex)); }),
             py::arg("m"), py::arg("modulus_hex"))
        .def_property_readonly("m", &FieldContext::m)
        .def_property_readonly("n", &FieldContext::n)
        .def_property_readonly("modulus_hex", [](const FieldContext& c) { return c.modulus().to_hex(); });

    py::class_<CyclicCode>(m, "CyclicCode")
        .def_property_readonly("n", &CyclicCode::n)
        .def_property_readonly("k", &CyclicCode::dimension)
        .def_property_readonly("defining_set", [](const CyclicCode& c) { return members(c.defining_set()); })
        .def_property_readonly("generator_hex", [](const CyclicCode& c) { return c.generator().to_hex(); })
        .def_property_readonly("generator_exponents", [](const CyclicCode& c) { return exponents(c.generator()); })
        .def("contains", [](const CyclicCode& c, const std::vector<std::uint8_t>& bits) { return contains(c, BitVector::from_bits(bits)); })
        .def("encode",
             [](const CyclicCode& c, const std::vector<std::uint8_t>& message) { return encode(c, BitVector::from_bits(message)).to_bits(); })
        .def("__eq__", [](const CyclicCode& a, const CyclicCode& b) { return a == b; })
        .def("__repr__", [](const CyclicCode& c) {
            return "<CyclicCode [" + std::to_string(c.n()) + "," + std::to_string(c.dimension()) + "] g=" + c.generator().to_hex() + ">";
        });

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("bound", &BoundReport::bound)
        .def_readonly("unit", &BoundReport::witness_unit)
        .def_readonly("run_start", &BoundReport::run_start)
        .def_readonly("run_length", &BoundReport::run_length);

    py::class_<DistanceCertificate>(m, "DistanceCertificate")
        .def_readonly("n", &DistanceCertificate::n)
        .def_readonly("k", &DistanceCertificate::k)
        .def_readonly("lower", &DistanceCertificate::lower)
        .def_readonly("upper", &DistanceCertificate::upper)
        .def_property_readonly("certified", &DistanceCertificate::certified)
        .def_property_readonly("witness", [](const DistanceCertificate& c) { return c.witness.to_bits(); })
        .def_property_readonly("evaluations", [](const DistanceCertificate& c) { return c.work.evaluations; });

    m.def(
        "weight_defining_set",
        [](int r, int deg, const std::vector<int>& subset) { return members(weight_defining_set(r, deg, subset)); }, py::arg("r"),
        py::arg("m"), py::arg("subset"));

    m.def(
        "weight_class_code", [](const FieldContext& ctx, int r, const std::vector<int>& subset) { return weight_class_code(ctx, r, subset); },
        py::arg("ctx"), py::arg("r"), py::arg("subset"));

    m.def(
        "duadic_scan",
        [](int r, int deg) {
            std::vector<std::vector<int>> out;
            for (const auto& p : duadic_scan(r, deg)) out.push_back(p.subset);
            return out;
        },
        py::arg("r"), py::arg("m"), "Canonical subsets S giving a splitting with mu = -1.");

    m.def("dual", &dual, py::arg("code"));
    m.def("even_weight_subcode", &even_weight_subcode, py::arg("code"));
    m.def("is_self_dual_extended", [](const CyclicCode& c) { return is_self_dual(extend(c)); }, py::arg("code"));
    m.def("is_doubly_even_extended", [](const CyclicCode& c) { return is_doubly_even(extend(c)); }, py::arg("code"));

    m.def("bch_bound", [](const CyclicCode& c) { return bch_bound(c.defining_set()); }, py::arg("code"));
    m.def(
        "amplified_bch_bound",
        [](const CyclicCode& c, std::uint64_t seed) {
            AmplifiedOptions o;
            o.seed = seed;
            return amplified_bch_bound(c.defining_set(), o);
        },
        py::arg("code"), py::arg("seed") = 1);
    m.def("theorem_bound", [](int deg, const std::vector<int>& s) { return theorem_bound(deg, s); }, py::arg("m"), py::arg("subset"));

    m.def(
        "lemma_suite",
        [](int deg) {
            py::list out;
            for (const auto& c : lemma_suite(deg)) {
                py::dict d;
                d["lemma"] = c.lemma;
                d["item"] = c.item;
                d["v"] = c.v;
                d["A"] = c.count;
                d["S"] = c.subset;
                d["pass"] = c.pass;
                d["degenerate"] = c.degenerate;
                d["alternate_pass"] = c.alternate_pass;
                out.append(d);
            }
            return out;
        },
        py::arg("m"));

    m.def(
        "exhaustive_min_weight", [](const CyclicCode& c, const std::string& parity) { return exhaustive_min_weight(c, parity_from(parity)); },
        py::arg("code"), py::arg("parity") = "all");

    m.def(
        "brouwer_zimmermann",
        [](const CyclicCode& c, std::uint64_t budget, unsigned threads, const std::string& parity, const std::string& checkpoint) {
            BZOptions o;
            o.budget = budget;
            o.threads = threads;
            o.target = parity_from(parity);
            o.checkpoint_path = checkpoint;
            py::gil_scoped_release release;
            return brouwer_zimmermann(c, o);
        },
        py::arg("code"), py::arg("budget") = BZOptions{}.budget, py::arg("threads") = 0, py::arg("parity") = "all",
        py::arg("checkpoint") = "");

    m.def("min_odd_weight", [](const CyclicCode& c) { return min_odd_weight(c); }, py::arg("code"));
}
