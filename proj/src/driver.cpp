#include "mku/driver.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "mku/errors.hpp"
#include "mku/galois.hpp"
#include "mku/groupfunc.hpp"
#include "mku/interval.hpp"
#include "mku/minkowski.hpp"
#include "mku/relative.hpp"

namespace mku {

namespace {

using nlohmann::ordered_json;

ordered_json interval_json(Interval const & x) {
    return ordered_json{{"mid", x.mid_string(40)}, {"rad", x.rad_string(8)}};
}

ordered_json ivec_json(std::vector<Interval> const & v) {
    ordered_json out = ordered_json::array();
    for (Interval const & x : v)
        out.push_back(interval_json(x));
    return out;
}

ordered_json matrix_json(IMat const & m) {
    ordered_json out = ordered_json::array();
    for (auto const & row : m)
        out.push_back(ivec_json(row));
    return out;
}

char const * sign_string(Sign s) {
    switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Positive: return "positive";
    default: return "undecided";
    }
}

ordered_json element_json(FieldElement const & a) { return ordered_json(coeff_strings(a)); }

bool is_abelian(GroupTable const & t) {
    for (int a = 0; a < t.order(); ++a)
        for (int b = a + 1; b < t.order(); ++b)
            if (t.op(a, b) != t.op(b, a))
                return false;
    return true;
}

/* Isomorphism-type label for the small groups that occur as Galois groups
 * of the supported fixtures; coarse fallback elsewhere. */
std::string group_name(GroupTable const & t) {
    int n = t.order();
    bool ab = is_abelian(t);
    int max_order = 0, involutions = 0;
    for (int a = 0; a < n; ++a) {
        max_order = std::max(max_order, t.element_order(a));
        if (t.element_order(a) == 2)
            ++involutions;
    }
    if (max_order == n)
        return "C" + std::to_string(n);
    if (n == 4)
        return "C2xC2";
    if (n == 6)
        return "S3";
    if (n == 8 && ab)
        return max_order == 4 ? "C4xC2" : "C2xC2xC2";
    if (n == 8)
        return involutions == 5 ? "D4" : "Q8";
    return ab ? "abelian" : "nonabelian";
}

ordered_json precision_json(RunOptions const & opt, std::vector<long> const & trace) {
    return ordered_json{
        {"start", opt.precision}, {"max", opt.max_precision}, {"trace", trace}};
}

PrecisionPolicy policy(RunOptions const & opt) {
    return PrecisionPolicy{static_cast<mpfr_prec_t>(opt.precision),
                           static_cast<mpfr_prec_t>(opt.max_precision)};
}

int exit_for_verdict(std::string const & v) {
    if (v == "certified") return 0;
    if (v == "undecided") return 2;
    if (v == "invalid fixture") return 3;
    if (v == "excluded case") return 4;
    return 1;
}

std::string render(ordered_json const & j, bool text);

void walk_text(ordered_json const & j, std::string const & prefix, std::ostream & out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            walk_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
                      out);
    } else if (j.is_array()) {
        bool scalar = std::all_of(j.begin(), j.end(),
                                  [](ordered_json const & v) { return !v.is_structured(); });
        if (scalar) {
            out << prefix << " =";
            for (ordered_json const & v : j)
                out << ' ' << (v.is_string() ? v.get<std::string>() : v.dump());
            out << '\n';
        } else {
            int i = 0;
            for (ordered_json const & v : j)
                walk_text(v, prefix + "[" + std::to_string(i++) + "]", out);
        }
    } else {
        out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump())
            << '\n';
    }
}

std::string render(ordered_json const & j, bool text) {
    if (!text)
        return j.dump(2) + "\n";
    std::ostringstream os;
    walk_text(j, "", os);
    return os.str();
}

RunResult pack(ordered_json const & doc, bool text) {
    RunResult r;
    r.exit_code = exit_for_verdict(doc.value("verdict", "error"));
    r.output = render(doc, text);
    return r;
}

/* Runs the filler and folds the error taxonomy into the document, so a
 * failed run still emits a well-formed report with the right verdict. */
template <typename F>
ordered_json guarded(ordered_json doc, F && fill) {
    try {
        fill(doc);
    } catch (invalid_fixture const & e) {
        doc["verdict"] = "invalid fixture";
        doc["message"] = e.what();
    } catch (excluded_case const & e) {
        doc["verdict"] = "excluded case";
        doc["message"] = e.what();
    } catch (precision_exhausted const & e) {
        doc["verdict"] = "undecided";
        doc["message"] = e.what();
    } catch (undecided const & e) {
        doc["verdict"] = "undecided";
        doc["message"] = e.what();
    } catch (verification_failed const & e) {
        doc["verdict"] = "verification failed";
        doc["message"] = e.what();
    } catch (std::exception const & e) {
        doc["verdict"] = "error";
        doc["message"] = e.what();
    }
    return doc;
}

void check_place(FieldContext const & ctx, int w) {
    if (w < 0 || w >= ctx.places.count())
        throw invalid_fixture("place index out of range: " + std::to_string(w));
}

/* Resolves the unit selection: explicit indices, or the first N-1. */
std::pair<std::vector<int>, std::vector<FieldElement>>
resolve_units(FieldContext const & ctx, std::vector<int> const & subset) {
    std::vector<int> idx = subset;
    if (idx.empty()) {
        int need = ctx.places.count() - 1;
        if (static_cast<int>(ctx.units.size()) < need)
            throw invalid_fixture("fixture provides fewer units than the unit rank");
        for (int i = 0; i < need; ++i)
            idx.push_back(i);
    }
    std::vector<FieldElement> out;
    for (int i : idx) {
        if (i < 0 || i >= static_cast<int>(ctx.units.size()))
            throw invalid_fixture("unit index out of range: " + std::to_string(i));
        out.push_back(ctx.units[i]);
    }
    return {idx, out};
}

void info_fill(ordered_json & d, Fixture const & fx, RunOptions const & opt) {
    d["field"] = fx.label;
    d["precision"] = nullptr;
    std::vector<long> trace;
    with_escalation(
        policy(opt),
        [&](mpfr_prec_t p) {
            FieldContext ctx(fx, p);
            d["degree"] = ctx.field.degree();
            d["discriminant"] = ctx.field.discriminant().get_str();
            d["place_count"] = ctx.places.count();
            int real = 0;
            ordered_json parr = ordered_json::array();
            for (int i = 0; i < ctx.places.count(); ++i) {
                Place const & pl = ctx.places.places[i];
                if (pl.is_real)
                    ++real;
                parr.push_back(ordered_json{{"index", i},
                                            {"real", pl.is_real},
                                            {"local_degree", pl.local_degree},
                                            {"root_re", interval_json(pl.root.re())},
                                            {"root_im", interval_json(pl.root.im())}});
            }
            d["real_places"] = real;
            d["complex_places"] = ctx.places.count() - real;
            d["places"] = std::move(parr);
            GroupTable const & t = ctx.group.table();
            std::vector<int> orders;
            for (int a = 0; a < t.order(); ++a)
                orders.push_back(t.element_order(a));
            d["group"] = ordered_json{{"order", t.order()},
                                      {"abelian", is_abelian(t)},
                                      {"element_orders", orders},
                                      {"name", group_name(t)}};
            d["unit_count"] = static_cast<int>(ctx.units.size());
            d["unit_rank"] = ctx.places.count() - 1;
            ordered_json sf = ordered_json::array();
            for (SubfieldSpec const & s : fx.subfields)
                sf.push_back(s.label);
            d["subfields"] = std::move(sf);
        },
        &trace);
    d["precision"] = precision_json(opt, trace);
    d["verdict"] = "certified";
}

void special_fill(ordered_json & d, Fixture const & fx, RunOptions const & opt) {
    d["field"] = fx.label;
    d["place"] = opt.place;
    d["unit_indices"] = nullptr;
    d["precision"] = nullptr;
    std::vector<long> trace;
    with_escalation(
        policy(opt),
        [&](mpfr_prec_t p) {
            FieldContext ctx(fx, p);
            check_place(ctx, opt.place);
            auto [idx, units] = resolve_units(ctx, opt.unit_subset);
            SpecialUnitCertificate sc = construct_special_unit(ctx.places, units, opt.place);
            LogMatrixCertificate mc =
                minkowski_matrix(ctx.group, ctx.places, sc.beta, opt.place);
            ConjugateSubgroupCertificate cc = conjugate_subgroup_certificate(
                ctx.group, ctx.places, sc.beta, opt.place, units);

            d["unit_indices"] = idx;
            d["degree"] = ctx.field.degree();
            d["place_count"] = ctx.places.count();

            ordered_json sp;
            sp["beta"] = element_json(sc.beta);
            sp["place_index"] = sc.place_index;
            ordered_json xi = ordered_json::array();
            for (mpz_class const & e : sc.xi)
                xi.push_back(e.get_str());
            sp["exponents"] = std::move(xi);
            ordered_json signs = ordered_json::array();
            for (Sign s : sc.sign_checks)
                signs.push_back(sign_string(s));
            sp["sign_checks"] = std::move(signs);
            sp["height"] = interval_json(sc.height);
            sp["height_bound"] = interval_json(sc.height_bound);
            sp["height_bound_ok"] = sc.height_bound_ok;
            d["special"] = std::move(sp);

            ordered_json mj;
            mj["transversal"] = mc.transversal;
            mj["entries"] = matrix_json(mc.mat);
            mj["column_sums"] = ivec_json(mc.column_sums);
            mj["rank"] = mc.rank;
            mj["null_vector"] = ivec_json(mc.null_vector);
            mj["null_sign"] = sign_string(mc.null_sign);
            mj["witness"] = element_json(mc.witness);
            mj["row_sums"] = ivec_json(mc.row_sums);
            mj["cofactor_constant"] = interval_json(mc.cofactor_constant);
            d["matrix"] = std::move(mj);

            ordered_json cj;
            cj["minors_checked"] = cc.minors_checked;
            cj["product_torsion"] = cc.product_torsion;
            cj["conjugate_regulator"] = interval_json(cc.conjugate_regulator);
            cj["basis_regulator"] = interval_json(cc.basis_regulator);
            cj["index_ratio"] = interval_json(cc.index_ratio);
            cj["bound_rhs"] = interval_json(cc.bound_rhs);
            cj["bound_certified"] = cc.bound_certified;
            cj["bound_ok"] = cc.bound_ok;
            d["conjugate_subgroup"] = std::move(cj);

            d["verdict"] = cc.bound_ok ? "certified" : "refuted";
        },
        &trace);
    d["precision"] = precision_json(opt, trace);
}

void relative_fill(ordered_json & d, Fixture const & fx, RunOptions const & opt) {
    d["field"] = fx.label;
    d["subfield"] = opt.subfield;
    d["place"] = opt.place;
    d["unit_indices"] = nullptr;
    d["precision"] = nullptr;
    if (opt.subfield.empty())
        throw invalid_fixture("relative needs a subfield label");
    std::vector<long> trace;
    with_escalation(
        policy(opt),
        [&](mpfr_prec_t p) {
            FieldContext ctx(fx, p);
            check_place(ctx, opt.place);
            FieldElement gen = subfield_generator(ctx, fx, opt.subfield);
            RelativeExtension ext = make_relative_extension(ctx.group, ctx.places, gen);
            auto [idx, units] = resolve_units(ctx, opt.unit_subset);
            RelativeUnitCertificate rc =
                construct_relative_unit(ctx.group, ctx.places, ext, units, opt.place);

            d["unit_indices"] = idx;
            d["degree"] = ctx.field.degree();
            d["place_count"] = ctx.places.count();

            ordered_json ej;
            ej["fixing_group"] = ext.H;
            ej["fibers"] = ext.fibers;
            ej["unit_rank"] = ext.r_l;
            ej["subfield_unit_rank"] = ext.r_k;
            ej["relative_rank"] = ext.relative_rank;
            d["extension"] = std::move(ej);

            ordered_json rj;
            rj["gamma"] = element_json(rc.gamma);
            rj["base"] = element_json(rc.base);
            rj["weights"] =
                ordered_json{{"cosets", rc.lambda.cosets}, {"values", rc.lambda.values}};
            rj["one_norm"] = one_norm(rc.lambda);
            ordered_json pairs = ordered_json::array();
            for (auto const & [s, t] : rc.conjugate_set)
                pairs.push_back(ordered_json::array({s, t}));
            rj["conjugate_set"] = std::move(pairs);
            rj["independence_rank"] = rc.independence_rank;
            rj["norm_torsion_order"] = rc.norm_torsion_witness;
            rj["height"] = interval_json(rc.height);
            rj["height_bound"] = interval_json(rc.height_bound);
            rj["conjugate_regulator"] = interval_json(rc.conjugate_regulator);
            d["relative_unit"] = std::move(rj);

            d["verdict"] = "certified";
        },
        &trace);
    d["precision"] = precision_json(opt, trace);
}

} // namespace

RunResult run_info(RunOptions const & opt) {
    ordered_json d;
    d["command"] = "info";
    d["field_path"] = opt.field_path;
    return pack(guarded(std::move(d),
                        [&](ordered_json & dd) {
                            Fixture fx = load_fixture(opt.field_path);
                            info_fill(dd, fx, opt);
                        }),
                opt.text);
}

RunResult run_special(RunOptions const & opt) {
    ordered_json d;
    d["command"] = "special";
    d["field_path"] = opt.field_path;
    return pack(guarded(std::move(d),
                        [&](ordered_json & dd) {
                            Fixture fx = load_fixture(opt.field_path);
                            special_fill(dd, fx, opt);
                        }),
                opt.text);
}

RunResult run_relative(RunOptions const & opt) {
    ordered_json d;
    d["command"] = "relative";
    d["field_path"] = opt.field_path;
    return pack(guarded(std::move(d),
                        [&](ordered_json & dd) {
                            Fixture fx = load_fixture(opt.field_path);
                            relative_fill(dd, fx, opt);
                        }),
                opt.text);
}

RunResult run_verify(std::string const & certificate_path, bool text) {
    ordered_json d;
    d["command"] = "verify";
    d["certificate"] = certificate_path;
    ordered_json out = guarded(std::move(d), [&](ordered_json & dd) {
        std::ifstream in(certificate_path);
        if (!in)
            throw invalid_fixture("cannot read certificate file: " + certificate_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        nlohmann::json cert = nlohmann::json::parse(buf.str(), nullptr, false);
        if (cert.is_discarded() || !cert.is_object())
            throw invalid_fixture("certificate is not a json object");

        std::string cmd = cert.value("command", "");
        RunOptions ropt;
        ropt.field_path = cert.value("field_path", "");
        ropt.place = cert.value("place", 0);
        ropt.subfield = cert.value("subfield", "");
        if (cert.contains("unit_indices") && cert["unit_indices"].is_array())
            for (auto const & v : cert["unit_indices"])
                ropt.unit_subset.push_back(v.get<int>());
        if (cert.contains("precision") && cert["precision"].is_object()) {
            ropt.precision = cert["precision"].value("start", 128L);
            ropt.max_precision = cert["precision"].value("max", 8192L);
        }

        RunResult fresh;
        if (cmd == "info")
            fresh = run_info(ropt);
        else if (cmd == "special")
            fresh = run_special(ropt);
        else if (cmd == "relative")
            fresh = run_relative(ropt);
        else
            throw invalid_fixture("certificate command is not recognized: " + cmd);

        nlohmann::json redo = nlohmann::json::parse(fresh.output);
        dd["verified_command"] = cmd;
        dd["field_path"] = ropt.field_path;
        bool matches = (redo == cert);
        dd["matches"] = matches;
        if (!matches)
            throw verification_failed("recomputation disagrees with the certificate");
        std::string v = redo.value("verdict", "error");
        dd["verdict"] = v;
        if (v != "certified")
            dd["message"] = redo.value("message", "");
    });
    return pack(out, text);
}

std::vector<Fixture> bundled_corpus() {
    std::vector<Fixture> v;
    v.push_back(Fixture{"sqrt2",
                        {-2, 0, 1},
                        {{mpq_class(1), mpq_class(1)}},
                        {}});
    v.push_back(Fixture{"sqrt5",
                        {-5, 0, 1},
                        {{mpq_class(1, 2), mpq_class(1, 2)}},
                        {}});
    v.push_back(Fixture{
        "biquad",
        {1, 0, -10, 0, 1},
        {{mpq_class(1), mpq_class(-9, 2), mpq_class(0), mpq_class(1, 2)},
         {mpq_class(2), mpq_class(11, 2), mpq_class(0), mpq_class(-1, 2)},
         {mpq_class(0), mpq_class(1)}},
        {{"sqrt2", {mpq_class(0), mpq_class(-9, 2), mpq_class(0), mpq_class(1, 2)}},
         {"sqrt3", {mpq_class(0), mpq_class(11, 2), mpq_class(0), mpq_class(-1, 2)}}}});
    v.push_back(Fixture{"zeta5",
                        {1, 1, 1, 1, 1},
                        {{mpq_class(1), mpq_class(1)}},
                        {{"sqrt5",
                          {mpq_class(-1), mpq_class(0), mpq_class(-2), mpq_class(-2)}}}});
    v.push_back(Fixture{
        "zeta20",
        {1, 0, -1, 0, 1, 0, -1, 0, 1},
        {{mpq_class(1), mpq_class(-1)},
         {mpq_class(1), mpq_class(0), mpq_class(0), mpq_class(-1)},
         {mpq_class(1), mpq_class(0), mpq_class(0), mpq_class(0), mpq_class(1),
          mpq_class(0), mpq_class(-1)}},
        {{"sqrt5",
          {mpq_class(1), mpq_class(0), mpq_class(0), mpq_class(0), mpq_class(2),
           mpq_class(0), mpq_class(-2)}}}});
    return v;
}

std::vector<SelftestCheck> selftest_plan() {
    return {
        {"sqrt2", "special", 0, "", 0},
        {"sqrt2", "special", 1, "", 0},
        {"sqrt5", "special", 0, "", 0},
        {"biquad", "special", 0, "", 0},
        {"biquad", "special", 1, "", 0},
        {"biquad", "special", 2, "", 0},
        {"biquad", "special", 3, "", 0},
        {"biquad", "relative", 0, "sqrt2", 0},
        {"biquad", "relative", 0, "sqrt3", 0},
        {"zeta5", "special", 0, "", 0},
        {"zeta5", "relative", 0, "sqrt5", 4},
        {"zeta20", "special", 0, "", 0},
        {"zeta20", "relative", 0, "sqrt5", 0},
    };
}

RunResult run_selftest(long precision, long max_precision, bool text) {
    ordered_json d;
    d["command"] = "selftest";
    d["precision"] = ordered_json{{"start", precision}, {"max", max_precision}};

    std::vector<Fixture> corpus = bundled_corpus();
    std::vector<SelftestCheck> plan = selftest_plan();
    ordered_json checks = ordered_json::array();
    int failed = 0;
    int exit_code = 0;

    for (SelftestCheck const & c : plan) {
        auto fit = std::find_if(corpus.begin(), corpus.end(),
                                [&](Fixture const & f) { return f.label == c.fixture_label; });
        RunOptions opt;
        opt.field_path = "builtin:" + c.fixture_label;
        opt.place = c.place;
        opt.subfield = c.subfield;
        opt.precision = precision;
        opt.max_precision = max_precision;

        ordered_json inner;
        inner["command"] = c.command;
        inner["field_path"] = opt.field_path;
        ordered_json out = guarded(std::move(inner), [&](ordered_json & dd) {
            if (fit == corpus.end())
                throw invalid_fixture("selftest fixture is missing: " + c.fixture_label);
            if (c.command == "special")
                special_fill(dd, *fit, opt);
            else
                relative_fill(dd, *fit, opt);
        });

        std::string verdict = out.value("verdict", "error");
        int code = exit_for_verdict(verdict);
        bool ok = (code == c.expected_exit);

        ordered_json row;
        row["fixture"] = c.fixture_label;
        row["command"] = c.command;
        row["place"] = c.place;
        if (!c.subfield.empty())
            row["subfield"] = c.subfield;
        row["verdict"] = verdict;
        row["exit"] = code;
        row["expected_exit"] = c.expected_exit;
        row["ok"] = ok;
        if (!ok) {
            row["message"] = out.value("message", "");
            ++failed;
            if (exit_code == 0)
                exit_code = code != 0 ? code : 1;
        }
        checks.push_back(std::move(row));
    }

    d["checks"] = std::move(checks);
    d["passed"] = static_cast<int>(plan.size()) - failed;
    d["failed"] = failed;
    d["verdict"] = failed == 0 ? "certified" : "failed";

    RunResult r;
    r.exit_code = failed == 0 ? 0 : exit_code;
    r.output = render(d, text);
    return r;
}

} // namespace mku
