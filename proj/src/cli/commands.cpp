#include <branges/cli.hpp>

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include <branges/errors.hpp>

namespace branges {

void validate(const RunConfig& cfg)
{
    auto nonneg = [](int v, const char* name) {
        if (v < 0)
            throw UsageError(std::string(name) + " must be >= 0");
    };
    nonneg(cfg.maxN, "--max-n");
    nonneg(cfg.sturmMaxN, "--sturm-max-n");
    nonneg(cfg.guessKRange, "--guess-k-range");
    nonneg(cfg.guessWindow, "--guess-window");
    nonneg(cfg.verifyWindow, "--verify-window");
    if (cfg.fact1MaxK < 1)
        throw UsageError("--max-k must be >= 1");
    if (cfg.verifyWindow <= cfg.guessWindow)
        throw UsageError("--verify-window must exceed --guess-window");
    if (cfg.k && *cfg.k < 0)
        throw UsageError("--k must be >= 0");
    if (cfg.flowSign != 1 && cfg.flowSign != -1)
        throw UsageError("--flow-sign must be 1 or -1");
    if (cfg.format != "json" && cfg.format != "text")
        throw UsageError("--format must be json or text");
    if (cfg.cacheDir.empty())
        throw UsageError("--cache-dir must not be empty");
}

namespace {

std::string table_file(const char* kind, int n)
{
    return std::string(kind) + "_table_N" + std::to_string(n) + ".json";
}

Json table_key(const char* kind, int n)
{
    return {{"artifact", std::string(kind) + "_table"}, {"maxN", n}, {"convention", kDoubledK0}};
}

Json cross_check_json(const char* route, const std::optional<std::pair<int, int>>& mismatch)
{
    Json at = mismatch ? Json::array({mismatch->first, mismatch->second}) : Json(nullptr);
    return {{"route", route}, {"equal", !mismatch.has_value()}, {"firstMismatch", at}};
}

struct Tables {
    CoeffTable b;
    CoeffTable a;
    Json bDoc;
    Json aDoc;
};

bool tables_ok(const Tables& t)
{
    return t.bDoc["crossCheck"]["equal"].get<bool>() && t.aDoc["crossCheck"]["equal"].get<bool>();
}

Tables ensure_tables(const Cache& cache, int maxN, std::ostream& err)
{
    const Json bKey = table_key("b", maxN);
    const Json aKey = table_key("a", maxN);
    auto bDoc = cache.load(table_file("b", maxN), bKey);
    auto aDoc = cache.load(table_file("a", maxN), aKey);
    if (bDoc && aDoc) {
        try {
            return {table_from_json(*bDoc), table_from_json(*aDoc), *bDoc, *aDoc};
        } catch (const std::exception& e) {
            err << "cache: unreadable table (" << e.what() << "), rebuilding\n";
        }
    } else if (std::filesystem::exists(cache.path(table_file("b", maxN)))
               || std::filesystem::exists(cache.path(table_file("a", maxN)))) {
        err << "cache: table files missing or failing checksum, rebuilding\n";
    }
    Tables t;
    t.b = build_b_table(maxN);
    t.a = build_a_table(maxN);
    Json bj = table_json(t.b);
    bj["crossCheck"] = cross_check_json("legendre-recurrence", first_mismatch(t.b, build_b_table_rec(maxN)));
    Json aj = table_json(t.a);
    aj["crossCheck"] = cross_check_json("convolution-of-b-rows", first_mismatch(t.a, a_via_convolution(t.b)));
    t.bDoc = cache.store(table_file("b", maxN), bKey, std::move(bj));
    t.aDoc = cache.store(table_file("a", maxN), aKey, std::move(aj));
    return t;
}

void print_json(std::ostream& out, const Json& doc)
{
    out << doc.dump(2) << '\n';
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

Json strip(Json doc)
{
    doc.erase("key");
    doc.erase("checksum");
    return doc;
}

// ---- tables ----

void print_tables_text(std::ostream& out, const Tables& t)
{
    for (const Json* d : {&t.bDoc, &t.aDoc}) {
        const Json& cc = (*d)["crossCheck"];
        out << (*d)["kind"].get<std::string>() << " table maxN=" << (*d)["maxN"].get<int>() << " ("
            << (*d)["convention"].get<std::string>() << "): series == "
            << cc["route"].get<std::string>() << ": " << yes_no(cc["equal"].get<bool>());
        if (!cc["firstMismatch"].is_null())
            out << " first mismatch (k,n) = (" << cc["firstMismatch"][0] << ","
                << cc["firstMismatch"][1] << ")";
        out << '\n';
    }
}

// ---- certify ----

std::string cert_file(int n)
{
    return "cert_fact2_N" + std::to_string(n) + ".json";
}

Json cert_key(const RunConfig& cfg)
{
    return {{"artifact", "cert_fact2"},
            {"maxN", cfg.maxN},
            {"sturmMaxN", cfg.sturmMaxN},
            {"convention", kDoubledK0}};
}

void print_certify_text(std::ostream& out, const Json& d)
{
    int total = (d["maxN"].get<int>() + 1) * (d["maxN"].get<int>() + 2) / 2;
    out << "square certificates: " << d["certificateCount"].get<int>() << "/" << total << '\n';
    out << "exponent pattern alpha = (n-k) mod 2, beta = k mod 2: "
        << (d["exponentPatternHolds"].get<bool>() ? "holds" : "violated") << '\n';
    out << "A == sum of products of B rows: " << yes_no(d["convolutionEqual"].get<bool>()) << '\n';
    int sturmOk = 0;
    for (const auto& s : d["sturm"])
        sturmOk += s["nonnegative"].get<bool>() ? 1 : 0;
    out << "Sturm-certified A entries (n <= " << d["sturmMaxN"].get<int>() << "): " << sturmOk << "/"
        << d["sturm"].size() << '\n';
    if (!d["failures"].empty()) {
        const Json& f = d["failures"][0];
        out << "first failure: " << f["table"].get<std::string>() << "(" << f["k"] << ","
            << f["n"] << "): " << f["reason"].get<std::string>() << '\n';
    }
    out << "status: " << (d["ok"].get<bool>() ? "ok" : "FAILED") << '\n';
}

// ---- guess ----

const GuessBounds kGuessBounds{4, 6, 3};

std::string recop_file(int k)
{
    return "recop_k" + std::to_string(k) + ".json";
}

Json recop_key(const RunConfig& cfg, int k)
{
    const SymSquareOptions sym;
    return {{"artifact", "recop"},
            {"k", k},
            {"guessWindow", cfg.guessWindow},
            {"verifyWindow", cfg.verifyWindow},
            {"guessBounds",
             {{"maxOrder", kGuessBounds.maxOrder},
              {"maxDegN", kGuessBounds.maxDegN},
              {"maxDegC", kGuessBounds.maxDegC}}},
            {"symSquareBounds", {{"maxDegN", sym.maxDegN}, {"maxDegC", sym.maxDegC}}},
            {"convention", kDoubledK0}};
}

SeqSlice column(const CoeffTable& t, int k, int from, int to)
{
    SeqSlice s;
    s.startN = from;
    s.source = "B column k=" + std::to_string(k);
    for (int n = from; n <= to; ++n)
        s.values.push_back(t.at(k, n));
    return s;
}

Json run_guess(const CoeffTable& b, int k, const RunConfig& cfg)
{
    Json d;
    d["k"] = k;
    d["fitRange"] = {k, k + cfg.guessWindow};
    d["verifyRange"] = {k, k + cfg.verifyWindow};
    d["operator"] = nullptr;
    d["verify"] = nullptr;
    d["symSquare"] = nullptr;
    d["reconstructionExact"] = false;
    d["bridging"] = false;
    d["ok"] = false;

    RecOp op;
    try {
        op = guess_rec(column(b, k, k, k + cfg.guessWindow), kGuessBounds);
    } catch (const NotFound&) {
        d["status"] = "not-found";
        d["searched"] = "order <= " + std::to_string(kGuessBounds.maxOrder) + ", deg_n <= "
                        + std::to_string(kGuessBounds.maxDegN) + ", deg_c <= "
                        + std::to_string(kGuessBounds.maxDegC);
        return d;
    }
    d["operator"] = recop_json(op);
    VerifyResult v = rec_verify(op, column(b, k, k, k + cfg.verifyWindow));
    d["verify"] = {{"ok", v.ok},
                   {"from", v.checkedFrom},
                   {"to", v.checkedTo},
                   {"firstFailure", v.firstFailure ? Json(*v.firstFailure) : Json(nullptr)},
                   {"leadingZeros", v.leadingZeros}};
    if (!v.ok) {
        d["status"] = "verify-failed";
        return d;
    }
    if (op.order() != 3) {
        d["status"] = "order-" + std::to_string(op.order());
        return d;
    }
    SymSquareOptions opt;
    opt.positivityFrom = k;
    opt.positivityTo = k + cfg.verifyWindow;
    SymSquareCert cert;
    try {
        cert = sym_square_root(op, opt);
    } catch (const NotFound&) {
        d["status"] = "no-sym-square";
        return d;
    }
    d["symSquare"] = sym_square_json(cert);
    MonicOrder3 want = monic_order3(op);
    MonicOrder3 got = cert.reconstruct();
    bool exact = got.t0 == want.t0 && got.t1 == want.t1 && got.t2 == want.t2;
    d["reconstructionExact"] = exact;
    bool bridge = (!cert.validFromN || k >= *cert.validFromN)
                  && bridging_holds(cert, k, b.at(k, k), b.at(k, k + 1), b.at(k, k + 2));
    d["bridging"] = bridge;
    bool ok = exact && bridge && cert.real_on_range();
    d["ok"] = ok;
    d["status"] = ok ? "certified" : "certificate-incomplete";
    return d;
}

void print_guess_text(std::ostream& out, const Json& d)
{
    out << "k=" << d["k"] << ": " << d["status"].get<std::string>();
    if (!d["operator"].is_null())
        out << ", order " << d["operator"]["order"];
    if (!d["verify"].is_null())
        out << ", verified on n=" << d["verifyRange"][0] << ".." << d["verifyRange"][1] << ": "
            << yes_no(d["verify"]["ok"].get<bool>());
    if (!d["symSquare"].is_null()) {
        const Json& s = d["symSquare"];
        out << "\n  A  = " << s["A"]["text"].get<std::string>()
            << "\n  B2 = " << s["B2"]["text"].get<std::string>()
            << "\n  Q  = " << s["Q"]["text"].get<std::string>() << "\n  valid from n = "
            << (s["validFromN"].is_null() ? std::string("all") : s["validFromN"].dump())
            << ", A >= 0 and B2 >= 0 on (0,1) for n=" << s["positivityFrom"] << ".."
            << s["positivityTo"] << ": " << yes_no(s["realOnRange"].get<bool>())
            << "\n  reconstruction exact: " << yes_no(d["reconstructionExact"].get<bool>())
            << ", initial values bridge: " << yes_no(d["bridging"].get<bool>());
    }
    if (d.contains("searched"))
        out << " (searched " << d["searched"].get<std::string>() << ")";
    out << '\n';
}

// ---- fact1 ----

std::string fact1_file(int K)
{
    return "fact1_K" + std::to_string(K) + ".json";
}

Json fact1_key(const RunConfig& cfg)
{
    return {{"artifact", "fact1"}, {"K", cfg.fact1MaxK}, {"flowSign", cfg.flowSign}};
}

void print_fact1_text(std::ostream& out, const Json& d)
{
    out << "flow sign " << d["flowSign"] << ", epsilon " << d["epsilon"] << '\n';
    for (const auto& o : d["orders"]) {
        out << "w^" << o["order"] << ": " << (o["matches"].get<bool>() ? "ok" : "MISMATCH");
        if (!o["matches"].get<bool>())
            out << " residual " << o["residual"].get<std::string>();
        out << '\n';
    }
    out << "flow consistency: " << yes_no(d["flowConsistent"].get<bool>()) << '\n';
    out << "status: " << (d["ok"].get<bool>() ? "ok" : "FAILED") << '\n';
}

std::vector<int> guess_columns(const RunConfig& cfg)
{
    if (cfg.k)
        return {*cfg.k};
    std::vector<int> ks;
    for (int k = 0; k <= cfg.guessKRange; ++k)
        ks.push_back(k);
    return ks;
}

template <class F>
int guarded(std::ostream& err, F&& body)
{
    try {
        return body();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace

int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        validate(cfg);
        Cache cache(cfg.cacheDir);
        Tables t = ensure_tables(cache, cfg.maxN, err);
        if (cfg.format == "json")
            print_json(out, {{"b", strip(t.bDoc)}, {"a", strip(t.aDoc)}, {"ok", tables_ok(t)}});
        else
            print_tables_text(out, t);
        if (!tables_ok(t)) {
            err << "table cross-check failed\n";
            return int(kExitMathFailure);
        }
        return int(kExitOk);
    });
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        validate(cfg);
        Cache cache(cfg.cacheDir);
        Tables t = ensure_tables(cache, cfg.maxN, err);
        const Json key = cert_key(cfg);
        auto doc = cache.load(cert_file(cfg.maxN), key);
        if (!doc)
            doc = cache.store(cert_file(cfg.maxN), key,
                              fact2_report_json(certify_fact2(t.b, t.a, cfg.sturmMaxN)));
        if (cfg.format == "json")
            print_json(out, strip(*doc));
        else
            print_certify_text(out, *doc);
        bool ok = (*doc)["ok"].get<bool>() && tables_ok(t);
        if (!ok && !(*doc)["failures"].empty()) {
            const Json& f = (*doc)["failures"][0];
            err << "first failing entry: " << f["table"].get<std::string>() << "(" << f["k"] << ","
                << f["n"] << ")\n";
        }
        return int(ok ? kExitOk : kExitMathFailure);
    });
}

int cmd_guess(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        validate(cfg);
        Cache cache(cfg.cacheDir);
        const std::vector<int> ks = guess_columns(cfg);
        std::vector<Json> docs(ks.size());
        std::optional<CoeffTable> b;
        for (std::size_t i = 0; i < ks.size(); ++i) {
            const Json key = recop_key(cfg, ks[i]);
            auto doc = cache.load(recop_file(ks[i]), key);
            if (!doc) {
                if (!b)
                    b = build_b_table_rec(*std::max_element(ks.begin(), ks.end()) + cfg.verifyWindow);
                doc = cache.store(recop_file(ks[i]), key, run_guess(*b, ks[i], cfg));
            }
            docs[i] = strip(*doc);
        }
        bool ok = std::all_of(docs.begin(), docs.end(), [](const Json& d) { return d["ok"].get<bool>(); });
        if (cfg.format == "json") {
            print_json(out, {{"columns", docs}, {"ok", ok}});
        } else {
            for (const auto& d : docs)
                print_guess_text(out, d);
        }
        return int(ok ? kExitOk : kExitMathFailure);
    });
}

int cmd_fact1(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        validate(cfg);
        Cache cache(cfg.cacheDir);
        const Json key = fact1_key(cfg);
        auto doc = cache.load(fact1_file(cfg.fact1MaxK), key);
        if (!doc)
            doc = cache.store(fact1_file(cfg.fact1MaxK), key,
                              fact1_json(verify_fact1(cfg.fact1MaxK, cfg.flowSign),
                                         flow_consistency(cfg.flowSign)));
        if (cfg.format == "json")
            print_json(out, strip(*doc));
        else
            print_fact1_text(out, *doc);
        bool ok = (*doc)["ok"].get<bool>();
        if (!ok && !(*doc)["firstFailure"].is_null()) {
            int j = (*doc)["firstFailure"].get<int>();
            err << "first failing order w^" << j << ", residual "
                << (*doc)["orders"][static_cast<std::size_t>(j - 1)]["residual"].get<std::string>() << '\n';
        }
        return int(ok ? kExitOk : kExitMathFailure);
    });
}

int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        validate(cfg);
        Cache cache(cfg.cacheDir);
        Json ledger;
        Json missing = Json::array();
        Json sources = Json::object();
        bool ok = true;
        auto fetch = [&](const std::string& name, const Json& key) -> std::optional<Json> {
            auto doc = cache.load(name, key);
            if (!doc) {
                missing.push_back(name);
                return std::nullopt;
            }
            sources[name] = (*doc)["checksum"];
            return strip(*doc);
        };

        ledger["config"] = {{"maxN", cfg.maxN},
                            {"sturmMaxN", cfg.sturmMaxN},
                            {"guessKRange", cfg.guessKRange},
                            {"guessWindow", cfg.guessWindow},
                            {"verifyWindow", cfg.verifyWindow},
                            {"fact1MaxK", cfg.fact1MaxK},
                            {"flowSign", cfg.flowSign},
                            {"convention", kDoubledK0}};

        Json tables = Json::object();
        for (const char* kind : {"b", "a"}) {
            if (auto d = fetch(table_file(kind, cfg.maxN), table_key(kind, cfg.maxN))) {
                tables[kind] = {{"maxN", (*d)["maxN"]}, {"convention", (*d)["convention"]},
                                {"crossCheck", (*d)["crossCheck"]}};
                ok = ok && (*d)["crossCheck"]["equal"].get<bool>();
            }
        }
        ledger["tables"] = tables;

        if (auto d = fetch(cert_file(cfg.maxN), cert_key(cfg))) {
            ledger["fact2"] = *d;
            ok = ok && (*d)["ok"].get<bool>();
        } else {
            ledger["fact2"] = nullptr;
        }

        Json recs = Json::array();
        for (int k = 0; k <= cfg.guessKRange; ++k)
            if (auto d = fetch(recop_file(k), recop_key(cfg, k))) {
                ok = ok && (*d)["ok"].get<bool>();
                recs.push_back(*d);
            }
        ledger["recurrences"] = recs;

        if (auto d = fetch(fact1_file(cfg.fact1MaxK), fact1_key(cfg))) {
            ledger["fact1"] = *d;
            ok = ok && (*d)["ok"].get<bool>();
        } else {
            ledger["fact1"] = nullptr;
        }

        ledger["missing"] = missing;
        ledger["sources"] = sources;
        ledger["complete"] = missing.empty();
        ledger["ok"] = ok && missing.empty();

        if (cfg.format == "json") {
            print_json(out, ledger);
        } else {
            out << "verification ledger\n";
            for (const char* kind : {"b", "a"})
                if (tables.contains(kind))
                    out << "  " << kind << " table cross-check ("
                        << tables[kind]["crossCheck"]["route"].get<std::string>()
                        << "): " << yes_no(tables[kind]["crossCheck"]["equal"].get<bool>()) << '\n';
            if (!ledger["fact2"].is_null())
                out << "  square certificates: " << ledger["fact2"]["certificateCount"]
                    << ", status " << (ledger["fact2"]["ok"].get<bool>() ? "ok" : "FAILED") << '\n';
            for (const auto& r : recs)
                out << "  k=" << r["k"] << ": " << r["status"].get<std::string>() << '\n';
            if (!ledger["fact1"].is_null())
                out << "  flow identity: epsilon " << ledger["fact1"]["epsilon"] << ", status "
                    << (ledger["fact1"]["ok"].get<bool>() ? "ok" : "FAILED") << '\n';
            for (const auto& m : missing)
                out << "  missing: " << m.get<std::string>() << '\n';
            out << "status: " << (ledger["ok"].get<bool>() ? "ok" : "INCOMPLETE OR FAILED") << '\n';
        }
        for (const auto& m : missing)
            err << "missing artifact: " << m.get<std::string>() << '\n';
        return int(ledger["ok"].get<bool>() ? kExitOk : kExitMathFailure);
    });
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Exact verification of the coefficient identities behind de Branges' theorem",
                 "branges"};
    app.set_config("--config", "", "key=value configuration file (flags take precedence)");
    app.add_option("--max-n", cfg.maxN, "largest n of the B and A tables")->capture_default_str();
    app.add_option("--max-k", cfg.fact1MaxK, "highest w order checked by fact1")->capture_default_str();
    app.add_option("--k", cfg.k, "single column for guess");
    app.add_option("--sturm-max-n", cfg.sturmMaxN, "largest n for Sturm checks of A")
        ->capture_default_str();
    app.add_option("--guess-k-range", cfg.guessKRange, "guess columns k = 0..this")
        ->capture_default_str();
    app.add_option("--guess-window", cfg.guessWindow, "fit on n = k..k+this")->capture_default_str();
    app.add_option("--verify-window", cfg.verifyWindow, "verify on n = k..k+this")
        ->capture_default_str();
    app.add_option("--flow-sign", cfg.flowSign, "sign of the w flow in fact1 (diagnostic)")
        ->capture_default_str();
    app.add_option("--cache-dir", cfg.cacheDir, "artifact directory")
        ->envname("BRANGES_CACHE_DIR")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "json or text")->capture_default_str();

    std::string command;
    for (const char* name : {"tables", "certify", "guess", "fact1", "report"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->fallthrough();
        sub->callback([&command, name] { command = name; });
    }
    app.get_subcommand("tables")->description("build B and A tables two ways and cross-check");
    app.get_subcommand("certify")->description("square certificates for B, positivity of A");
    app.get_subcommand("guess")->description("guess and certify the order-3 recurrences of B columns");
    app.get_subcommand("fact1")->description("verify the coefficient flow identity through w^max-k");
    app.get_subcommand("report")->description("aggregate cached results into one ledger");
    app.require_subcommand(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (command == "tables")
        return cmd_tables(cfg, out, err);
    if (command == "certify")
        return cmd_certify(cfg, out, err);
    if (command == "guess")
        return cmd_guess(cfg, out, err);
    if (command == "fact1")
        return cmd_fact1(cfg, out, err);
    return cmd_report(cfg, out, err);
}

} // namespace branges
