#include "sv/output.hpp"

#include <iomanip>
#include <ostream>

#include <nlohmann/json.hpp>

namespace sv {

std::string join_i64(const std::vector<i64>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

Json report_json(const ConditionReport& rep, const std::string& certified_via, i64 int_cap) {
    Json c;
    c["ineq0_holds"] = rep.ineq0_holds;
    c["ineq0_slack"] = to_i64(rep.ineq0_slack, int_cap);
    c["ineq1_holds"] = {rep.ineq1_holds[0], rep.ineq1_holds[1]};
    c["ineq1_margin"] = {to_i64(rep.ineq1_margin[0], int_cap), to_i64(rep.ineq1_margin[1], int_cap)};
    c["ineq1_positivity"] = {to_i64(rep.ineq1_positivity[0], int_cap),
                             to_i64(rep.ineq1_positivity[1], int_cap)};
    c["s_le_N_e"] = {rep.s_le_N_e[0], rep.s_le_N_e[1]};
    c["ineq2_holds"] = rep.ineq2_holds;
    c["ineq3_holds"] = rep.ineq3_holds;
    c["ineq3_slack"] = to_i64(rep.ineq3_slack, int_cap);
    c["ineq_new_holds"] = rep.ineq_new_holds;
    if (!certified_via.empty()) c["certified_via"] = certified_via;
    return c;
}

Json certificate_json(const Certificate& cert, i64 int_cap) {
    Json j;
    j["n"] = cert.shape.n;
    j["d"] = cert.shape.d;
    j["e0"] = cert.split.e0;
    j["e1"] = cert.split.e1;
    j["s"] = cert.s;
    j["F"] = to_i64(cert.F, int_cap);
    j["expected"] = to_i64(cert.expected, int_cap);
    j["defect_lb"] = to_i64(cert.defect_lb, int_cap);
    j["conditions"] = report_json(cert.report, cert.certified_via, int_cap);
    j["provenance"] = cert.provenance;
    return j;
}

Json record_json(const Certificate& cert, const VerificationInfo* verification, i64 int_cap) {
    Json j = certificate_json(cert, int_cap);
    if (verification) {
        Json v;
        if (verification->rank) {
            v["rank"] = *verification->rank;
        } else {
            v["rank"] = nullptr;
            v["error"] = verification->error;
        }
        v["trials"] = verification->trials;
        v["prime"] = verification->prime;
        v["seed"] = verification->seed;
        v["consistent"] = verification->consistent;
        j["verification"] = std::move(v);
    }
    return j;
}

std::string csv_header(bool with_verification) {
    std::string h = "k,n,d,e0,e1,s,F,expected,defect_lb,provenance";
    if (with_verification) h += ",rank,trials,prime,seed,consistent";
    return h;
}

std::string csv_row(const Certificate& cert, const VerificationInfo* verification) {
    std::string row = std::to_string(cert.shape.factors());
    row += ',' + join_i64(cert.shape.n, ' ');
    row += ',' + join_i64(cert.shape.d, ' ');
    row += ',' + join_i64(cert.split.e0, ' ');
    row += ',' + join_i64(cert.split.e1, ' ');
    row += ',' + std::to_string(cert.s);
    row += ',' + cert.F.str();
    row += ',' + cert.expected.str();
    row += ',' + cert.defect_lb.str();
    row += ',' + cert.provenance;
    if (verification) {
        row += ',';
        if (verification->rank) row += std::to_string(*verification->rank);
        row += ',' + std::to_string(verification->trials);
        row += ',' + std::to_string(verification->prime);
        row += ',' + std::to_string(verification->seed);
        row += ',';
        row += verification->rank ? (verification->consistent ? "yes" : "no") : "error";
    }
    return row;
}

void write_table(std::ostream& os, const std::vector<Certificate>& certs,
                 const std::vector<VerificationInfo>* verification) {
    std::vector<std::string> headers = {"n", "d", "e0", "e1", "s", "F", "expected", "defect_lb",
                                        "provenance"};
    if (verification) {
        headers.insert(headers.end(), {"rank", "consistent"});
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < certs.size(); ++i) {
        const Certificate& c = certs[i];
        std::vector<std::string> row = {
            join_i64(c.shape.n, ','), join_i64(c.shape.d, ','),  join_i64(c.split.e0, ','),
            join_i64(c.split.e1, ','), std::to_string(c.s),      c.F.str(),
            c.expected.str(),          c.defect_lb.str(),        c.provenance};
        if (verification) {
            const VerificationInfo& v = (*verification)[i];
            row.push_back(v.rank ? std::to_string(*v.rank) : "-");
            row.push_back(v.rank ? (v.consistent ? "yes" : "no") : "error");
        }
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> width(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
        width[c] = headers[c].size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    const auto print_row = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
        }
        os << '\n';
    };
    print_row(headers);
    for (const auto& row : rows) print_row(row);
}

void write_condition_report(std::ostream& os, const ConditionReport& rep) {
    const auto yn = [](bool b) { return b ? "holds" : "fails"; };
    os << "ineq0: " << yn(rep.ineq0_holds) << "  slack " << rep.ineq0_slack.str() << '\n';
    for (int i = 0; i < 2; ++i) {
        os << "ineq1 side " << i << ": " << yn(rep.ineq1_holds[i]) << "  margin "
           << rep.ineq1_margin[i].str() << "  kernel dim " << rep.ineq1_positivity[i].str()
           << '\n';
    }
    os << "s <= N(e_i): " << yn(rep.s_le_N_e[0] && rep.s_le_N_e[1]) << '\n';
    os << "ineq2 (D > E): " << yn(rep.ineq2_holds) << '\n';
    os << "ineq3 (F < expected): " << yn(rep.ineq3_holds) << "  slack " << rep.ineq3_slack.str()
       << '\n';
    os << "surplus shortcut (s >= ceil(N/(D+1))): " << yn(rep.ineq_new_holds) << '\n';
}

} // namespace sv
