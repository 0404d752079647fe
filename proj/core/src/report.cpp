#include "exc/report.hpp"

#include <json.hpp>
#include <sstream>

namespace exc {

using nlohmann::json;

namespace {

json check_to_json(const CheckResult& c, bool include_runtime) {
    json j{{"id", c.id},
           {"description", c.description},
           {"paper_ref", c.paper_ref},
           {"status", c.status},
           {"measured", c.measured},
           {"expected", c.expected},
           {"tolerance", c.tolerance}};
    if (include_runtime) j["runtime_ms"] = c.runtime_ms;
    return j;
}

}  // namespace

std::string report_json(const SuiteReport& r, bool include_runtime) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) checks.push_back(check_to_json(c, include_runtime));
    json j{{"suite", r.suite},     {"seed", r.seed},     {"backend", r.backend},
           {"calibration", r.calibration}, {"checks", checks}, {"status", r.status},
           {"version", r.version}};
    return j.dump(2);
}

std::string report_markdown(const SuiteReport& r) {
    std::ostringstream os;
    os << "# suite `" << r.suite << "` - " << r.status << "\n\n";
    os << "- seed: " << r.seed << "\n- backend: " << r.backend << "\n- calibration: "
       << r.calibration << "\n- version: " << r.version << "\n\n";
    os << "| check | status | measured | expected | tol | ref | ms |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const CheckResult& c : r.checks) {
        os << "| " << c.id << " | " << c.status << " | " << c.measured << " | " << c.expected
           << " | " << c.tolerance << " | " << c.paper_ref << " | " << c.runtime_ms << " |\n";
    }
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const CheckResult& c : r.checks) {
        if (c.status == "pass") ++passed;
        if (c.status == "fail") ++failed;
        if (c.status == "skip") ++skipped;
    }
    os << "\n" << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return os.str();
}

namespace {

std::string rat_entry(const Rat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_entry(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

}  // namespace

std::string operator_json(const OpQ& op) {
    json entries = json::array();
    for (const Rat& x : op.mat.data()) entries.push_back(rat_entry(x));
    json j{{"backend", "exact"},
           {"dimension", op.mat.rows()},
           {"basis", basis_name(op.basis)},
           {"entries", entries}};
    return j.dump();
}

std::string operator_json(const OpD& op) {
    json entries = json::array();
    for (double x : op.mat.data()) entries.push_back(x);
    json j{{"backend", "float"},
           {"dimension", op.mat.rows()},
           {"basis", basis_name(op.basis)},
           {"entries", entries}};
    return j.dump();
}

OpQ operator_q_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("backend").get<std::string>() != "exact")
        throw std::invalid_argument("operator_q_from_json: backend tag mismatch");
    std::size_t n = j.at("dimension").get<std::size_t>();
    std::string basis = j.at("basis").get<std::string>();
    Basis b = Basis::Generic;
    for (Basis cand : {Basis::J27, Basis::JC54, Basis::PC112})
        if (basis == basis_name(cand)) b = cand;
    MatQ m(n, n);
    const json& entries = j.at("entries");
    if (entries.size() != n * n) throw std::invalid_argument("operator_q_from_json: entry count");
    for (std::size_t k = 0; k < entries.size(); ++k)
        m.data()[k] = rat_from_entry(entries[k].get<std::string>());
    return OpQ(std::move(m), b);
}

std::string subalgebra_json(const SubalgebraBasis& b, const std::string& lemma_id) {
    json ops = json::array();
    for (const MatQ& m : b.ops) {
        json entries = json::array();
        for (const Rat& x : m.data()) entries.push_back(rat_entry(x));
        ops.push_back(entries);
    }
    json j{{"label", b.label},
           {"lemma", lemma_id},
           {"ambient", basis_name(b.basis)},
           {"backend", "exact"},
           {"dimension", b.dim()},
           {"operators", ops}};
    return j.dump();
}

std::string word_json(const std::vector<WordStep>& word) {
    json steps = json::array();
    for (const WordStep& s : word) steps.push_back(json{{"generator", s.generator}, {"params", s.params}});
    return json(steps).dump();
}

}  // namespace exc
