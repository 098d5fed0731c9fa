#include "duadic/report.hpp"

namespace duadic {

Json to_json(const BoundReport& report) {
    return Json{{"bound", report.bound},
                {"unit", report.witness_unit ? Json(*report.witness_unit) : Json(nullptr)},
                {"run_start", report.run_start},
                {"run_length", report.run_length}};
}

Json to_json(const DuadicPair& pair) {
    return Json{{"r", pair.r}, {"m", pair.m}, {"S", pair.subset}, {"S_bar", pair.complement}, {"mu", pair.mu}};
}

Json to_json(const LemmaClause& clause) {
    return Json{{"lemma", clause.lemma}, {"item", clause.item},   {"m", clause.m},
                {"v", clause.v},         {"A", clause.count},     {"S", clause.subset},
                {"unit", clause.unit},   {"pass", clause.pass},   {"degenerate", clause.degenerate},
                {"alternate_pass", clause.alternate_pass}};
}

Json to_json(const DistanceCertificate& cert) {
    return Json{{"n", cert.n},
                {"k", cert.k},
                {"parity", cert.parity == ParityFilter::kOddOnly ? "odd" : "all"},
                {"lower", cert.lower},
                {"upper", cert.upper},
                {"status", to_string(cert.status)},
                {"witness_hex", cert.witness.to_hex()},
                {"evaluations", cert.work.evaluations},
                {"seconds", cert.work.seconds}};
}

Json defining_set_json(const DefiningSet& set) {
    return Json(std::vector<Residue>(set.members().begin(), set.members().end()));
}

Json code_record(const CyclicCode& code) {
    const auto ext = extend(code);
    return Json{{"n", code.n()},
                {"k", code.dimension()},
                {"defining_set_size", code.defining_set().size()},
                {"generator_hex", code.generator().to_hex()},
                {"properties", {{"self_dual_extended", is_self_dual(ext)}, {"doubly_even_extended", is_doubly_even(ext)}}}};
}

DistanceCertificate certificate_from_json(const Json& j) {
    DistanceCertificate cert;
    cert.n = j.at("n").get<std::uint32_t>();
    cert.k = j.at("k").get<std::uint32_t>();
    cert.parity = j.value("parity", std::string("all")) == "odd" ? ParityFilter::kOddOnly : ParityFilter::kAll;
    cert.lower = j.at("lower").get<int>();
    cert.upper = j.at("upper").get<int>();
    const auto status = j.at("status").get<std::string>();
    if (status != "certified" && status != "partial") throw std::invalid_argument("unknown certificate status '" + status + "'");
    cert.status = status == "certified" ? CertificateStatus::kCertified : CertificateStatus::kPartial;
    cert.witness = BitVector::from_hex(j.at("witness_hex").get<std::string>(), cert.n);
    cert.work.evaluations = j.value("evaluations", std::uint64_t{0});
    cert.work.seconds = j.value("seconds", 0.0);
    return cert;
}

bool recheck_certificate(const DistanceCertificate& cert, const CyclicCode& code) {
    if (cert.n != code.n() || cert.k != code.dimension()) return false;
    if (cert.lower > cert.upper || cert.lower < 1) return false;
    if (cert.certified() && cert.lower != cert.upper) return false;
    if (static_cast<int>(cert.witness.weight()) != cert.upper) return false;
    if (cert.parity == ParityFilter::kOddOnly && cert.upper % 2 == 0) return false;
    return contains(code, cert.witness);
}

}  // namespace duadic
