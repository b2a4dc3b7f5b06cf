#pragma once

/**
 * @file cli_app.hpp
 * @brief Command line front end: classify, witness, family, census, verify.
 *
 * run_cli is the whole program; the binary target is a two-line wrapper so
 * tests can drive every subcommand in process. Exit codes: 0 success,
 * 1 a verification claim failed, 2 bad input or usage, 3 internal error.
 */

#include "census.hpp"
#include "io.hpp"
#include "verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace seifert {

namespace cli_detail {

inline const char* verdict_text(VerdictTag t) {
    switch (t) {
    case VerdictTag::AdmitsTautAnalytic: return "admits a taut foliation (analytic)";
    case VerdictTag::NoTautC2: return "no taut foliation of class C2 or better";
    case VerdictTag::NoTautC0: return "no taut foliation, even C0";
    case VerdictTag::NotApplicable: return "not applicable";
    }
    return "?";
}

inline const char* reason_text(VerdictReason r) {
    switch (r) {
    case VerdictReason::Ehn1: return "b0 lies in the interior interval [2, n-2]";
    case VerdictReason::Ehn2OutOfRange: return "b0 falls outside [1, n-1]";
    case VerdictReason::PropertyStarFound:
        return "witness search succeeded at b0 = 1 (up to orientation)";
    case VerdictReason::PropertyStarEmpty:
        return "witness search exhausted at b0 = 1 (up to orientation)";
    case VerdictReason::SmallN: return "fewer than three exceptional fibers";
    case VerdictReason::NotQHSInput: return "Euler number is zero";
    }
    return "?";
}

inline std::string homology_text(const HomologyClass& h) {
    switch (h.tag) {
    case HomologyTag::ZHS:
        return std::string("integral homology sphere (sign ") +
               (h.epsilon == 1 ? "+1)" : "-1)");
    case HomologyTag::NonIntegralQHS: return "rational homology sphere, not integral";
    case HomologyTag::NotQHS: return "not a rational homology sphere";
    }
    return "?";
}

inline void print_classification(std::ostream& os, const CensusRecord& rec) {
    os << "presentation:  " << print_invariant(rec.invariant) << '\n';
    os << "tuple form:    " << print_tuple_form(rec.invariant) << '\n';
    os << "euler number:  " << rec.homology.euler.str() << '\n';
    os << "b0:            " << rec.invariant.b0().str() << '\n';
    os << "homology:      " << homology_text(rec.homology) << '\n';
    if (rec.geom) {
        os << "geometry:      " << to_string(rec.geom->tag) << " (base chi = "
           << rec.geom->chi.str() << ")\n";
    } else {
        os << "geometry:      not applicable\n";
    }
    os << "verdict:       " << verdict_text(rec.verdict.tag) << '\n';
    os << "reason:        " << reason_text(rec.verdict.reason) << '\n';
    if (rec.verdict.witness) {
        os << "witness:       m=" << rec.verdict.witness->m.str()
           << " alpha=" << rec.verdict.witness->alpha.str();
        if (rec.verdict.flipped) os << " (for the reversed orientation)";
        os << '\n';
    }
    if (rec.constructed) {
        os << "construction:  " << to_string(rec.constructed->branch) << " gives m="
           << rec.constructed->result.m.str() << " alpha="
           << rec.constructed->result.alpha.str()
           << (rec.constructed->verified ? ", verified" : ", NOT verified") << '\n';
    }
}

inline void print_trace(std::ostream& os, const WitnessTrace& t) {
    os << "epsilon:   " << (t.epsilon == 1 ? "+1" : "-1") << '\n';
    os << "flipped:   " << (t.flipped ? "yes" : "no") << '\n';
    os << "step1:     " << to_string(t.step1) << '\n';
    os << "branch:    " << to_string(t.branch) << '\n';
    if (t.quantities) {
        const BaseQuantities& q = *t.quantities;
        os << "alpha1:    " << q.alpha1.str() << '\n';
        os << "alpha2:    " << q.alpha2.str() << '\n';
        os << "a:         " << q.a.str() << '\n';
        os << "b:         " << q.b.str() << '\n';
        os << "N:         " << q.N.str() << '\n';
        os << "r:         " << q.r.str() << '\n';
        os << "r':        " << q.r_prime.str() << '\n';
        os << "r'':       " << q.r_second.str() << '\n';
    }
    if (t.bezout) {
        os << "bezout:    u=" << t.bezout->u.str() << " v=" << t.bezout->v.str()
           << " p=" << t.bezout->p.str() << '\n';
    }
    os << "witness:   m=" << t.result.m.str() << " alpha=" << t.result.alpha.str() << '\n';
    os << "verified:  " << (t.verified ? "yes" : "no") << '\n';
}

inline std::string record_line(const CensusRecord& rec) {
    RecordRow row = to_row(rec);
    std::string s = print_invariant(rec.invariant);
    s += "  ";
    s += row.verdict;
    if (!row.regularity.empty()) s += " (" + row.regularity + ")";
    if (!row.witness_m.empty()) s += "  m=" + row.witness_m + " alpha=" + row.witness_alpha;
    return s;
}

struct ListOpts {
    std::string format = "jsonl";
    long long limit = -1;
    std::string output;
};

// Shared sink for the record-emitting subcommands: routes rows to the chosen
// format, honouring --limit and --output.
class RecordWriter {
public:
    RecordWriter(const ListOpts& opts, std::ostream& fallback) : opts_(opts) {
        if (!opts.output.empty() && opts.output != "-") {
            file_.open(opts.output, std::ios::binary);
            if (!file_) fail(ErrorKind::IoError, "cannot open output file " + opts.output);
            os_ = &file_;
        } else {
            os_ = &fallback;
        }
    }

    void operator()(const CensusRecord& rec) {
        if (opts_.limit >= 0 && emitted_ >= opts_.limit) return;
        ++emitted_;
        if (opts_.format == "csv") {
            header();
            write_csv_row(*os_, to_row(rec));
        } else if (opts_.format == "jsonl") {
            write_jsonl_row(*os_, to_row(rec));
        } else {
            *os_ << record_line(rec) << '\n';
        }
    }

    void finish() {
        if (opts_.format == "csv") header();
    }

    long long emitted() const { return emitted_; }

private:
    void header() {
        if (!header_done_) {
            write_csv_header(*os_);
            header_done_ = true;
        }
    }

    ListOpts opts_;
    std::ofstream file_;
    std::ostream* os_ = nullptr;
    bool header_done_ = false;
    long long emitted_ = 0;
};

inline std::vector<Claim> claims_for(const std::string& token) {
    if (token == "main1") return {Claim::IntegralAdmits};
    if (token == "main2") return {Claim::FamilyVerdicts};
    if (token == "geom-notaut") return {Claim::GeomNoTaut};
    if (token == "prop-global") return {Claim::PropGlobal};
    if (token == "triple-bounds") return {Claim::TripleBounds};
    if (token == "step-bounds") return {Claim::StepBounds};
    if (token == "claims") return {Claim::TripleBounds, Claim::StepBounds};
    if (token == "witness-agreement") return {Claim::WitnessAgreement};
    if (token == "zhs-unique") return {Claim::ZhsUniqueness};
    if (token == "all")
        return {Claim::IntegralAdmits, Claim::FamilyVerdicts,  Claim::GeomNoTaut,
                Claim::PropGlobal,        Claim::TripleBounds,    Claim::StepBounds,
                Claim::WitnessAgreement,  Claim::ZhsUniqueness};
    fail(ErrorKind::InvalidInput, "unknown claim '" + token + "'");
}

// Bounds that keep every claim comfortably inside a few seconds.
inline VerifyBounds default_bounds(Claim c) {
    switch (c) {
    case Claim::IntegralAdmits: return {3, 0, 30};
    case Claim::FamilyVerdicts: return {3, 0, 40};
    case Claim::GeomNoTaut: return {3, 5, 6};
    case Claim::PropGlobal: return {3, 6, 6};
    case Claim::TripleBounds: return {3, 0, 40};
    case Claim::StepBounds: return {3, 0, 40};
    case Claim::WitnessAgreement: return {3, 0, 30};
    case Claim::ZhsUniqueness: return {3, 0, 16};
    }
    return {3, 0, 10};
}

} // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Seifert fibered rational homology spheres: classification, taut "
                 "foliation verdicts, witness construction, censuses."};
    app.require_subcommand(1);
    int code = 0;

    // classify
    struct {
        std::string input;
        std::string format = "text";
    } cl;
    auto* classify = app.add_subcommand(
        "classify", "Classify one manifold given as \"(c; b1/a1, b2/a2, ...)\"");
    classify->add_option("invariant", cl.input, "Seifert presentation")->required();
    classify->add_option("--format", cl.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    classify->callback([&] {
        CensusRecord rec = classify_record(parse_invariant(cl.input));
        if (cl.format == "json") {
            out << row_json(to_row(rec)).dump(2) << '\n';
        } else if (cl.format == "csv") {
            write_csv_header(out);
            write_csv_row(out, to_row(rec));
        } else {
            cli_detail::print_classification(out, rec);
        }
    });

    // witness
    struct {
        std::string input;
        std::string format = "text";
    } wi;
    auto* witness = app.add_subcommand(
        "witness", "Run the witness construction on an integral homology sphere");
    witness->add_option("invariant", wi.input, "Seifert presentation with b0 = 1 or n-1")
        ->required();
    witness->add_option("--format", wi.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    witness->callback([&] {
        WitnessTrace tr = construct_witness(parse_invariant(wi.input));
        if (wi.format == "json")
            out << trace_json(tr).dump(2) << '\n';
        else
            cli_detail::print_trace(out, tr);
    });

    // family
    struct {
        std::string name;
        FamilyParams params;
        cli_detail::ListOpts list{.format = "text"};
    } fa;
    auto* family_cmd =
        app.add_subcommand("family", "Emit classified members of a named test family");
    family_cmd->add_option("name", fa.name, "m1, m2, m3, or m4")
        ->required()
        ->check(CLI::IsMember({"m1", "m2", "m3", "m4"}));
    family_cmd->add_option("--n", fa.params.n, "fiber count (m1, m2, m4)");
    family_cmd->add_option("--a-max,--amax", fa.params.a_max,
                           "tail multiplicity bound (m1, m2)");
    family_cmd->add_option("--k-max", fa.params.k_max, "parameter bound (m3)");
    family_cmd->add_option("--b-max", fa.params.b_max, "tail parameter bound (m4)");
    family_cmd->add_option("--format", fa.list.format, "text, jsonl, or csv")
        ->check(CLI::IsMember({"text", "jsonl", "csv"}));
    family_cmd->add_option("--limit", fa.list.limit, "stop after this many records");
    family_cmd->add_option("--output,--out", fa.list.output,
                           "write to a file instead of stdout");
    family_cmd->callback([&] {
        FamilyName name = fa.name == "m1"   ? FamilyName::M1
                          : fa.name == "m2" ? FamilyName::M2
                          : fa.name == "m3" ? FamilyName::M3
                                            : FamilyName::M4;
        FamilyParams p = fa.params;
        if (name == FamilyName::M4 && p.n == 3) p.n = 4;
        if (p.a_max == 0) p.a_max = 20;
        if (p.k_max == 0) p.k_max = 20;
        if (p.b_max == 0) p.b_max = 20;
        cli_detail::RecordWriter write(fa.list, out);
        family_stream(name, p,
                      [&](const SeifertInvariant& m) { write(classify_record(m)); });
        write.finish();
    });

    // census
    struct {
        std::string kind;
        bool zhs_flag = false;
        bool qhs_flag = false;
        int n = 3;
        long long a_max = 0;
        std::vector<long long> b0s;
        cli_detail::ListOpts list;
    } ce;
    auto* census = app.add_subcommand("census", "Enumerate classified manifolds");
    census->add_option("kind", ce.kind, "zhs (integral) or qhs (all rational)")
        ->check(CLI::IsMember({"zhs", "qhs"}));
    census->add_flag("--zhs", ce.zhs_flag, "same as the positional kind zhs");
    census->add_flag("--qhs", ce.qhs_flag, "same as the positional kind qhs");
    census->add_option("--n", ce.n, "number of exceptional fibers")->check(CLI::Range(3, 16));
    census->add_option("--a-max,--amax", ce.a_max, "multiplicity bound")->required();
    census->add_option("--b0", ce.b0s, "qhs only: comma separated list of b0 values to scan")
        ->delimiter(',');
    census->add_option("--format", ce.list.format, "jsonl, csv, or text")
        ->check(CLI::IsMember({"text", "jsonl", "csv"}));
    census->add_option("--limit", ce.list.limit, "stop after this many records");
    census->add_option("--output,--out", ce.list.output,
                       "write to a file instead of stdout");
    census->callback([&] {
        if (ce.kind.empty()) {
            if (ce.zhs_flag == ce.qhs_flag)
                fail(ErrorKind::InvalidInput, "pick one census kind: zhs or qhs");
            ce.kind = ce.zhs_flag ? "zhs" : "qhs";
        } else if (ce.zhs_flag || ce.qhs_flag) {
            fail(ErrorKind::InvalidInput, "census kind given twice");
        }
        cli_detail::RecordWriter write(ce.list, out);
        if (ce.kind == "zhs") {
            if (!ce.b0s.empty())
                fail(ErrorKind::InvalidInput, "--b0 applies to the qhs census only");
            enumerate_zhs_stream(ce.n, ce.a_max, [&](const CensusRecord& r) { write(r); });
        } else {
            QhsBounds b;
            b.n = ce.n;
            b.a_max = ce.a_max;
            b.b0_values = ce.b0s;
            enumerate_qhs_stream(b, [&](const CensusRecord& r) { write(r); });
        }
        write.finish();
    });

    // verify
    struct {
        std::string claim;
        int n = 0;
        int n_max = 0;
        long long a_max = 0;
        std::string format = "text";
    } ve;
    auto* verify = app.add_subcommand("verify", "Check structural claims over a census");
    verify->add_option("claim", ve.claim,
                       "main1, main2, geom-notaut, prop-global, triple-bounds, "
                       "step-bounds, claims, witness-agreement, zhs-unique, or all")
        ->required();
    verify->add_option("--n", ve.n, "fiber count (lower end)");
    verify->add_option("--n-max", ve.n_max, "fiber count upper end, where ranges apply");
    verify->add_option("--a-max,--amax", ve.a_max, "multiplicity bound");
    verify->add_option("--format", ve.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->callback([&] {
        std::vector<VerificationReport> reports;
        for (Claim c : cli_detail::claims_for(ve.claim)) {
            VerifyBounds b = cli_detail::default_bounds(c);
            if (ve.n > 0) b.n = ve.n;
            if (ve.n_max > 0) b.n_max = ve.n_max;
            if (ve.a_max > 0) b.a_max = ve.a_max;
            reports.push_back(verify_claim(c, b));
        }
        if (ve.format == "json") {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : reports) arr.push_back(report_json(r));
            out << arr.dump(2) << '\n';
        } else if (ve.format == "csv") {
            for (std::size_t i = 0; i < reports.size(); ++i)
                write_report_csv(out, reports[i], i == 0);
        } else {
            for (const auto& r : reports) print_report(out, r);
        }
        for (const auto& r : reports)
            if (!r.passed()) code = 1;
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int cli_code = app.exit(e, out, err);
        return cli_code == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
    return code;
}

} // namespace seifert
