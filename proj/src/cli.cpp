#include "sv/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sv/families.hpp"
#include "sv/output.hpp"
#include "sv/search.hpp"

namespace sv {

namespace {

i64 parse_i64(const std::string& flag, const std::string& token) {
    i64 value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument(flag + ": '" + token + "' is not an integer");
    }
    return value;
}

std::vector<i64> parse_int_list(const std::string& flag, const std::string& text) {
    std::vector<i64> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        out.push_back(parse_i64(flag, text.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// "lo..hi" (inclusive) or a single value.
std::pair<i64, i64> parse_range(const std::string& flag, const std::string& text) {
    const std::size_t dots = text.find("..", 1); // skip a possible leading minus
    if (dots == std::string::npos) {
        const i64 v = parse_i64(flag, text);
        return {v, v};
    }
    const i64 lo = parse_i64(flag, text.substr(0, dots));
    const i64 hi = parse_i64(flag, text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument(flag + ": empty range '" + text + "'");
    return {lo, hi};
}

struct FormatOpt {
    std::string value = "table";

    void check() const {
        if (value != "table" && value != "csv" && value != "json") {
            throw std::invalid_argument("--format: expected table, csv or json");
        }
    }
};

void emit_records(std::ostream& out, const std::string& format,
                  const std::vector<Certificate>& certs,
                  const std::vector<VerificationInfo>* verification) {
    if (format == "json") {
        Json arr = Json::array();
        for (std::size_t i = 0; i < certs.size(); ++i) {
            arr.push_back(record_json(certs[i], verification ? &(*verification)[i] : nullptr));
        }
        out << arr.dump(2) << '\n';
    } else if (format == "csv") {
        out << csv_header(verification != nullptr) << '\n';
        for (std::size_t i = 0; i < certs.size(); ++i) {
            out << csv_row(certs[i], verification ? &(*verification)[i] : nullptr) << '\n';
        }
    } else {
        write_table(out, certs, verification);
    }
}

struct CheckArgs {
    std::string n, d, e0;
    i64 s = 0;
    bool json = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
    Shape shape(parse_int_list("--n", a.n), parse_int_list("--d", a.d));
    Splitting split = make_splitting(shape, parse_int_list("--e0", a.e0));
    if (a.s < 1) throw std::invalid_argument("--s: must be >= 1");

    auto cert = certify(shape, split, a.s, "check");
    if (a.json) {
        if (cert) {
            out << certificate_json(*cert).dump(2) << '\n';
        } else {
            Json j;
            j["certified"] = false;
            j["conditions"] = report_json(check_conditions(shape, split, a.s));
            out << j.dump(2) << '\n';
        }
    } else {
        write_condition_report(out, cert ? cert->report : check_conditions(shape, split, a.s));
        if (cert) {
            out << "certified defective: s=" << a.s << "  F=" << cert->F.str()
                << "  expected=" << cert->expected.str()
                << "  defect >= " << cert->defect_lb.str() << "  (via " << cert->certified_via
                << ")\n";
        } else {
            out << "conditions not met; no certificate\n";
        }
    }
    if (!cert) {
        err << "not certified: conditions failed\n";
        return kExitNotCertified;
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string n, d, e0;
    i64 s = 0;
    std::uint32_t prime = 2147483647;
    int trials = 3;
    std::uint64_t seed = 0;
    i64 max_cells = kDefaultMaxCells;
    bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    Shape shape(parse_int_list("--n", a.n), parse_int_list("--d", a.d));
    if (a.s < 1) throw std::invalid_argument("--s: must be >= 1");
    if (a.trials < 1) throw std::invalid_argument("--trials: must be >= 1");
    FieldSpec field{a.prime};
    validate(field);

    const i64 r = terracini_rank(shape, a.s, field, a.trials, a.seed, a.max_cells);
    const Int expected = expected_dim(shape, a.s);
    const Int expected_rank = expected + 1;
    const Int deficit = expected_rank - r;
    const bool full = deficit == 0;

    std::optional<Int> f_bound;
    bool consistent = false;
    std::optional<Splitting> split;
    if (!a.e0.empty()) {
        split = make_splitting(shape, parse_int_list("--e0", a.e0));
        f_bound = f_value(shape, *split, a.s);
        consistent = Int(r) <= *f_bound + 1;
    }

    if (a.json) {
        Json j;
        j["n"] = shape.n;
        j["d"] = shape.d;
        j["s"] = a.s;
        j["prime"] = a.prime;
        j["trials"] = a.trials;
        j["seed"] = a.seed;
        j["rank"] = r;
        j["expected"] = to_i64(expected);
        j["expected_rank"] = to_i64(expected_rank);
        j["verdict"] = full ? "nondefective (certified)" : "rank deficit " + deficit.str();
        if (split) {
            j["e0"] = split->e0;
            j["e1"] = split->e1;
            j["F"] = to_i64(*f_bound);
            j["consistent_with_F"] = consistent;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "shape n=" << join_i64(shape.n, ',') << " d=" << join_i64(shape.d, ',')
            << " s=" << a.s << '\n';
        out << "prime " << a.prime << "  trials " << a.trials << "  seed " << a.seed << '\n';
        out << "terracini rank: " << r << '\n';
        out << "expected: " << expected.str() << " (rank " << expected_rank.str() << ")\n";
        out << "verdict: "
            << (full ? std::string("nondefective (certified)") : "rank deficit " + deficit.str())
            << '\n';
        if (split) {
            out << "F bound: " << f_bound->str() << " (rank bound " << Int(*f_bound + 1).str()
                << ")\n";
            out << "consistent with F bound: " << (consistent ? "yes" : "no") << '\n';
        }
    }
    (void)err;
    return kExitOk;
}

struct FamiliesArgs {
    std::string family;
    std::string a, n, d, k;
    FormatOpt format;
    bool cross = false;
    std::uint32_t prime = 2147483647;
    int trials = 3;
    std::uint64_t seed = 0;
    i64 max_cells = kDefaultMaxCells;
};

void require_flag(const std::string& value, const std::string& flag, const std::string& family) {
    if (value.empty()) {
        throw std::invalid_argument(flag + ": required for --family " + family);
    }
}

int cmd_families(const FamiliesArgs& a, std::ostream& out, std::ostream& err) {
    a.format.check();
    std::vector<FamilyCase> cases;
    std::vector<std::string> notes;
    const auto attempt = [&](auto&& make) {
        try {
            cases.push_back(make());
        } catch (const RangeError& e) {
            notes.emplace_back(e.what());
        }
    };

    if (a.family == "cgg") {
        require_flag(a.a, "--a", "cgg");
        const auto [lo, hi] = parse_range("--a", a.a);
        for (i64 av = lo; av <= hi; ++av) {
            try {
                auto two = cgg_family(av);
                cases.push_back(std::move(two[0]));
                cases.push_back(std::move(two[1]));
            } catch (const RangeError& e) {
                notes.emplace_back(e.what());
            }
        }
    } else if (a.family == "even" || a.family == "odd") {
        require_flag(a.n, "--n", a.family);
        require_flag(a.d, "--d", a.family);
        const bool even = a.family == "even";
        const auto [nlo, nhi] = parse_range("--n", a.n);
        const auto [dlo, dhi] = parse_range("--d", a.d);
        for (i64 nv = nlo; nv <= nhi; ++nv) {
            for (i64 dv = dlo; dv <= dhi; ++dv) {
                if (nv < 1 || dv < 1) {
                    notes.push_back("skipping n=" + std::to_string(nv) + " d=" +
                                    std::to_string(dv) + ": need n,d >= 1");
                    continue;
                }
                const i64 a_top = even ? even_a_max(nv, dv) : odd_case2_a_max(nv, dv);
                auto [alo, ahi] = a.a.empty() ? std::pair<i64, i64>{0, a_top}
                                              : parse_range("--a", a.a);
                for (i64 av = alo; av <= ahi; ++av) {
                    i64 klo = 1, khi = 0;
                    if (av >= 0 && av <= a_top) {
                        khi = even ? even_k_max(nv, dv, av)
                                   : (av <= odd_case1_a_max(nv, dv) ? odd_case1_k_max(nv, dv, av)
                                                                    : odd_case2_k_max(nv, dv, av));
                    }
                    if (!a.k.empty()) std::tie(klo, khi) = parse_range("--k", a.k);
                    if (a.k.empty() && klo > khi) {
                        if (!a.a.empty()) {
                            notes.push_back(a.family + ": no admissible k at n=" +
                                            std::to_string(nv) + " d=" + std::to_string(dv) +
                                            " a=" + std::to_string(av) +
                                            (av >= 0 && av <= a_top ? "" : " (a out of range)"));
                        }
                        continue; // enumerated a with no admissible k
                    }
                    for (i64 kv = klo; kv <= khi; ++kv) {
                        attempt([&] {
                            return even ? even_family(nv, dv, av, kv) : odd_family(nv, dv, av, kv);
                        });
                    }
                }
            }
        }
    } else if (a.family == "four") {
        require_flag(a.n, "--n", "four");
        require_flag(a.d, "--d", "four");
        const auto [nlo, nhi] = parse_range("--n", a.n);
        const auto [dlo, dhi] = parse_range("--d", a.d);
        for (i64 nv = nlo; nv <= nhi; ++nv) {
            for (i64 dv = dlo; dv <= dhi; ++dv) {
                auto [klo, khi] = a.k.empty() && nv >= 1 && dv >= 2
                                      ? four_factor_k_range(nv, dv)
                                      : std::pair<i64, i64>{0, -1};
                if (!a.k.empty()) std::tie(klo, khi) = parse_range("--k", a.k);
                if (a.k.empty() && klo > khi && !(nv >= 1 && dv >= 2)) {
                    notes.push_back("four-factor: need n >= 1 and d >= 2, got n=" +
                                    std::to_string(nv) + " d=" + std::to_string(dv));
                }
                for (i64 kv = klo; kv <= khi; ++kv) {
                    attempt([&] { return four_factor_family(nv, dv, kv); });
                }
            }
        }
    } else {
        throw std::invalid_argument("--family: expected cgg, even, odd or four");
    }

    for (const std::string& note : notes) err << note << '\n';

    std::vector<Certificate> certs;
    certs.reserve(cases.size());
    for (const FamilyCase& fc : cases) certs.push_back(fc.cert);

    std::vector<VerificationInfo> verification;
    if (a.cross) {
        FieldSpec field{a.prime};
        validate(field);
        for (const CrossCheck& cc : cross_verify(certs, field, a.trials, a.seed, a.max_cells)) {
            verification.push_back(
                {cc.rank, a.trials, a.prime, a.seed, cc.consistent, cc.error});
        }
    }
    emit_records(out, a.format.value, certs, a.cross ? &verification : nullptr);
    return kExitOk;
}

struct SearchArgs {
    i64 max_factors = 0;
    i64 max_n = 0;
    i64 max_deg = 0;
    i64 max_s = 0;
    i64 max_dim = 0; // 0 = unset
    FormatOpt format;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
    a.format.check();
    SearchBounds bounds{a.max_factors, a.max_n, a.max_deg, a.max_s,
                        a.max_dim > 0 ? std::optional<i64>(a.max_dim) : std::nullopt};
    validate(bounds);
    const std::vector<Certificate> certs = enumerate_defective(bounds);
    emit_records(out, a.format.value, certs, nullptr);
    (void)err;
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"defectivity certificates and rank verification for Segre-Veronese secants"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "evaluate the defectivity conditions for one case");
    check->add_option("--n", check_args.n, "factor dimensions, comma separated")->required();
    check->add_option("--d", check_args.d, "multi-degree (1,...,1,dl), comma separated")->required();
    check->add_option("--e0", check_args.e0, "side-0 part of the degree splitting")->required();
    check->add_option("--s", check_args.s, "number of points")->required();
    check->add_flag("--json", check_args.json, "emit JSON");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "compute the stacked tangent rank over GF(p)");
    verify->add_option("--n", verify_args.n)->required();
    verify->add_option("--d", verify_args.d)->required();
    verify->add_option("--s", verify_args.s)->required();
    verify->add_option("--prime", verify_args.prime, "field modulus");
    verify->add_option("--trials", verify_args.trials, "independent random trials");
    verify->add_option("--seed", verify_args.seed, "RNG seed, echoed in the report");
    verify->add_option("--e0", verify_args.e0, "optional splitting for an F-bound consistency check");
    verify->add_option("--max-cells", verify_args.max_cells, "matrix size cap (rows*cols)");
    verify->add_flag("--json", verify_args.json, "emit JSON");

    FamiliesArgs families_args;
    auto* families = app.add_subcommand("families", "generate built-in defective families");
    families->add_option("--family", families_args.family, "cgg, even, odd or four")->required();
    families->add_option("--a", families_args.a, "parameter a, value or lo..hi");
    families->add_option("--n", families_args.n, "parameter n, value or lo..hi");
    families->add_option("--d", families_args.d, "parameter d, value or lo..hi");
    families->add_option("--k", families_args.k, "parameter k, value or lo..hi");
    families->add_option("--format", families_args.format.value, "table, csv or json");
    families->add_flag("--cross-verify", families_args.cross, "rank-check every certificate");
    families->add_option("--prime", families_args.prime);
    families->add_option("--trials", families_args.trials);
    families->add_option("--seed", families_args.seed);
    families->add_option("--max-cells", families_args.max_cells);

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "enumerate certified cases within bounds");
    search->add_option("--max-factors", search_args.max_factors)->required();
    search->add_option("--max-n", search_args.max_n)->required();
    search->add_option("--max-deg", search_args.max_deg)->required();
    search->add_option("--max-s", search_args.max_s)->required();
    search->add_option("--max-dim", search_args.max_dim, "optional cap on the ambient dimension");
    search->add_option("--format", search_args.format.value, "table, csv or json");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(check_args, out, err);
        if (verify->parsed()) return cmd_verify(verify_args, out, err);
        if (families->parsed()) return cmd_families(families_args, out, err);
        return cmd_search(search_args, out, err);
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace sv
