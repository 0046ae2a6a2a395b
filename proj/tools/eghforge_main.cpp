#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "eghforge/io.hpp"

using namespace eghforge;

namespace {

struct Options {
    std::string input;
    std::string second_input;
    std::string out_path;
    std::vector<int> caps;
    bool caps_given = false;
    int max_degree = -1;
    uint64_t seed = 0;
    int characteristic = 2;
    std::string trust_name = "assume";

    Trust trust() const {
        if (trust_name == "monomial")
            return Trust::monomial_certificate;
        if (trust_name == "linear")
            return Trust::linear_certificate;
        return Trust::assume;
    }
};

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

void check_caps(const std::vector<int>& caps) {
    for (size_t i = 0; i < caps.size(); ++i) {
        if (caps[i] < 1)
            throw CLI::ValidationError("--caps", "caps must be >= 1");
        if (i > 0 && caps[i] < caps[i - 1])
            throw CLI::ValidationError("--caps", "caps must be non-decreasing");
    }
}

Json envelope(const std::string& command, uint64_t seed) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["command"] = command;
    j["seed"] = std::to_string(seed);
    return j;
}

int emit(const Json& report, const std::string& out_path, int code) {
    std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write '" + out_path + "'");
        out << text;
    }
    return code;
}

int run_hilbert(const Options& opt) {
    MonomialIdeal I = load_ideal(opt.input);
    int D = opt.max_degree >= 0 ? opt.max_degree : 10;
    Json j = envelope("hilbert", opt.seed);
    j["ideal"] = to_json(I);
    j["max_degree"] = D;
    j["values"] = to_json(hilbert_function_range(I, D));
    return emit(j, opt.out_path, 0);
}

int run_series(const Options& opt) {
    MonomialIdeal I = load_ideal(opt.input);
    HilbertSeries s = hilbert_series(I);
    Json j = envelope("series", opt.seed);
    j["ideal"] = to_json(I);
    j["series"] = to_json(s);
    if (!I.is_unit())
        j["q_polynomial"] = to_json(reduce_series(s));
    return emit(j, opt.out_path, 0);
}

int run_height(const Options& opt) {
    MonomialIdeal I = load_ideal(opt.input);
    Json j = envelope("height", opt.seed);
    j["ideal"] = to_json(I);
    j["height"] = height(I);
    return emit(j, opt.out_path, 0);
}

int run_regseq_verify(const Options& opt) {
    std::optional<MonomialIdeal> I;
    if (!opt.second_input.empty())
        I = load_ideal(opt.second_input);
    std::vector<ProductOfLinearForms> fs =
        load_products(opt.input, I ? std::optional<int>(I->n) : std::nullopt);
    RegSeqCheck check = verify_regular_sequence(fs);
    Json j = envelope("regseq-verify", opt.seed);
    j["products"] = to_json(fs);
    j["regular"] = check.regular;
    j["witness_selection"] = check.regular ? Json(nullptr) : Json(check.witness);
    bool contained = true;
    if (I) {
        Json per = Json::array();
        for (const auto& f : fs) {
            bool c = contained_in(f, *I);
            contained = contained && c;
            per.push_back(c);
        }
        j["contained_in_ideal"] = std::move(per);
    }
    bool pass = check.regular && contained;
    j["all_pass"] = pass;
    return emit(j, opt.out_path, pass ? 0 : 1);
}

int run_regseq_search(const Options& opt) {
    MonomialIdeal I = load_ideal(opt.input);
    if (!opt.caps_given)
        throw CLI::ValidationError("--caps", "regseq-search needs the degree sequence");
    auto found = search_regular_sequence(I, opt.caps, opt.seed);
    Json j = envelope("regseq-search", opt.seed);
    j["ideal"] = to_json(I);
    j["caps"] = opt.caps;
    j["found"] = found.has_value();
    j["products"] = found ? to_json(*found) : Json(nullptr);
    if (found) {
        j["verified"] = verify_regular_sequence(*found).regular;
        Json contained = Json::array();
        for (const auto& f : *found)
            contained.push_back(contained_in(f, I));
        j["contained_in_ideal"] = std::move(contained);
    }
    return emit(j, opt.out_path, found ? 0 : 1);
}

int run_egh(const Options& opt) {
    MonomialIdeal I = load_ideal(opt.input);
    Json j = envelope("egh", opt.seed);
    j["ideal"] = to_json(I);

    CapVector ring;
    std::optional<std::vector<ProductOfLinearForms>> certificate;
    if (opt.caps_given) {
        ring = make_cap_vector(I.n, opt.caps);
        if (opt.trust() != Trust::assume) {
            if (opt.trust() == Trust::monomial_certificate) {
                if (auto ms = monomial_regular_sequence(I, opt.caps)) {
                    std::vector<ProductOfLinearForms> fs;
                    for (const Monomial& m : *ms)
                        fs.push_back(product_from_monomial(m));
                    certificate = std::move(fs);
                }
            } else {
                certificate = search_regular_sequence(I, opt.caps, opt.seed);
            }
        }
    } else {
        DegreeSequenceResult seq = choose_degree_sequence(I, std::nullopt, opt.trust(), opt.seed);
        ring = seq.ring;
        certificate = std::move(seq.certificate);
    }
    j["caps"] = ring.caps;
    j["certificate"] = certificate ? to_json(*certificate) : Json(nullptr);

    std::optional<int> horizon;
    if (opt.max_degree >= 0)
        horizon = opt.max_degree;
    try {
        WitnessResult w = egh_witness(I, ring, horizon);
        j["result"] = to_json(w);
        WitnessReport report = verify_witness(I, w.witness, ring);
        j["assertions"] = to_json(report);
        return emit(j, opt.out_path, w.certified && report.all() ? 0 : 1);
    } catch (const infeasible_error& e) {
        Json inf;
        inf["degree"] = e.info.degree;
        inf["reason"] = e.info.reason;
        Json required = Json::array(), segment = Json::array();
        for (const Monomial& m : e.info.required)
            required.push_back(to_string(m));
        for (const Monomial& m : e.info.segment)
            segment.push_back(to_string(m));
        inf["required"] = std::move(required);
        inf["segment"] = std::move(segment);
        j["infeasible"] = std::move(inf);
        return emit(j, opt.out_path, 1);
    }
}

int run_egh_verify(const Options& opt) {
    MonomialIdeal I = load_ideal(opt.input);
    Json wj = load_json(opt.second_input);
    MonomialIdeal W;
    std::vector<int> caps;
    if (wj.is_object() && wj.contains("result") && wj["result"].contains("witness")) {
        W = ideal_from_json(wj["result"]["witness"]);
        for (const Json& c : wj["result"]["caps"])
            caps.push_back(c.get<int>());
    } else if (wj.is_object() && wj.contains("witness")) {
        W = ideal_from_json(wj["witness"]);
        for (const Json& c : wj["caps"])
            caps.push_back(c.get<int>());
    } else {
        W = ideal_from_json(wj);
    }
    if (opt.caps_given)
        caps = opt.caps;
    if (caps.empty())
        throw std::runtime_error("no caps: pass --caps or a witness report with a caps field");
    CapVector ring = make_cap_vector(I.n, caps);
    WitnessReport report = verify_witness(I, W, ring);
    Json j = envelope("egh-verify", opt.seed);
    j["ideal"] = to_json(I);
    j["witness"] = to_json(W);
    j["caps"] = ring.caps;
    j["assertions"] = to_json(report);
    j["certified"] = report.series_equal;
    return emit(j, opt.out_path, report.all() ? 0 : 1);
}

int run_sr(const Options& opt) {
    SimplicialComplex c = load_complex(opt.input);
    Json j = envelope("sr", opt.seed);
    j["complex"] = to_json(c);
    j["ideal"] = to_json(stanley_reisner(c));
    return emit(j, opt.out_path, 0);
}

int run_complex(const Options& opt) {
    MonomialIdeal I = load_ideal(opt.input);
    ComplexOfResult r = complex_of(I);
    Json j = envelope("complex", opt.seed);
    j["ideal"] = to_json(I);
    j["complex"] = to_json(r.complex);
    j["omitted_vertices"] = r.omitted;
    return emit(j, opt.out_path, 0);
}

int run_fvec(const Options& opt) {
    SimplicialComplex c = load_complex(opt.input);
    Json j = envelope("fvec", opt.seed);
    j["f_vector"] = to_json(f_vector(c));
    return emit(j, opt.out_path, 0);
}

int run_hvec(const Options& opt) {
    SimplicialComplex c = load_complex(opt.input);
    Json j = envelope("hvec", opt.seed);
    j["f_vector"] = to_json(f_vector(c));
    j["h_vector"] = to_json(h_vector(c));
    return emit(j, opt.out_path, 0);
}

int run_polarize(const Options& opt) {
    MonomialIdeal I = load_ideal(opt.input);
    Polarization p = polarize(I);
    Json j = envelope("polarize", opt.seed);
    j["ideal"] = to_json(I);
    j["polarization"] = to_json(p);
    return emit(j, opt.out_path, 0);
}

int run_cm_check(const Options& opt) {
    SimplicialComplex c = load_complex(opt.input);
    bool cm = is_cohen_macaulay(c, opt.characteristic);
    Json j = envelope("cm-check", opt.seed);
    j["char"] = opt.characteristic;
    j["homology_ranks"] = reduced_homology_ranks(c, opt.characteristic);
    j["cohen_macaulay"] = cm;
    return emit(j, opt.out_path, cm ? 0 : 1);
}

int run_balanced_check(const Options& opt) {
    SimplicialComplex c = load_complex(opt.input);
    VertexPartition p = load_partition(opt.second_input);
    bool balanced = is_balanced(c, p);
    Json j = envelope("balanced-check", opt.seed);
    j["partition"] = to_json(p);
    j["balanced"] = balanced;
    return emit(j, opt.out_path, balanced ? 0 : 1);
}

int run_transfer(const Options& opt, bool char_given) {
    SimplicialComplex c = load_complex(opt.input);
    TransferOptions topt;
    if (opt.caps_given)
        topt.caps = opt.caps;
    topt.trust = opt.trust();
    topt.seed = opt.seed;
    if (char_given)
        topt.characteristic = opt.characteristic;
    TransferResult r = balanced_transfer(c, topt);
    Json j = envelope("transfer", opt.seed);
    j["input"] = to_json(c);
    Json body = to_json(r);
    for (auto& [key, value] : body.items())
        j[key] = value;
    bool pass = r.h_equal && r.balanced && (!r.gamma_cm || *r.gamma_cm);
    return emit(j, opt.out_path, pass ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"EGH witness ideals, lex-plus-powers constructions, and balanced transfers "
                 "for monomial ideals and simplicial complexes"};
    app.require_subcommand(1);

    Options opt;
    bool char_given = false;

    auto add_common = [&](CLI::App* cmd, bool caps, bool seed, bool trust, bool maxdeg,
                          bool characteristic) {
        cmd->add_option("--out", opt.out_path, "write the JSON report to this file");
        if (caps) {
            cmd->add_option("--caps", opt.caps, "degree sequence a1,a2,... (non-decreasing)")
                ->delimiter(',')
                ->check(CLI::Number);
        }
        if (seed)
            cmd->add_option("--seed", opt.seed, "seed for randomized searches");
        if (trust)
            cmd->add_option("--trust", opt.trust_name, "certificate level")
                ->check(CLI::IsMember({"monomial", "linear", "assume"}));
        if (maxdeg)
            cmd->add_option("--max-degree", opt.max_degree, "degree horizon")
                ->envname("EGHFORGE_MAX_DEGREE");
        if (characteristic)
            cmd->add_option("--char", opt.characteristic, "prime field characteristic");
    };

    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function values of S/I");
    hilbert->add_option("ideal", opt.input, "ideal file")->required();
    add_common(hilbert, false, false, false, true, false);

    CLI::App* series = app.add_subcommand("series", "Hilbert series and Q-polynomial of S/I");
    series->add_option("ideal", opt.input, "ideal file")->required();
    add_common(series, false, false, false, false, false);

    CLI::App* height_cmd = app.add_subcommand("height", "height of a monomial ideal");
    height_cmd->add_option("ideal", opt.input, "ideal file")->required();
    add_common(height_cmd, false, false, false, false, false);

    CLI::App* rsv = app.add_subcommand("regseq-verify",
                                       "verify a regular sequence of products of linear forms");
    rsv->add_option("products", opt.input, "products file")->required();
    rsv->add_option("ideal", opt.second_input, "optional ideal for containment checks");
    add_common(rsv, false, false, false, false, false);

    CLI::App* rss = app.add_subcommand("regseq-search",
                                       "search a regular sequence of prescribed degrees in I");
    rss->add_option("ideal", opt.input, "ideal file")->required();
    add_common(rss, true, true, false, false, false);

    CLI::App* egh_cmd = app.add_subcommand("egh", "construct and certify a witness ideal");
    egh_cmd->add_option("ideal", opt.input, "ideal file")->required();
    add_common(egh_cmd, true, true, true, true, false);

    CLI::App* eghv = app.add_subcommand("egh-verify", "re-verify a witness against an ideal");
    eghv->add_option("ideal", opt.input, "ideal file")->required();
    eghv->add_option("witness", opt.second_input, "witness ideal or egh report file")->required();
    add_common(eghv, true, false, false, false, false);

    CLI::App* sr_cmd = app.add_subcommand("sr", "Stanley-Reisner ideal of a complex");
    sr_cmd->add_option("complex", opt.input, "complex file")->required();
    add_common(sr_cmd, false, false, false, false, false);

    CLI::App* cx = app.add_subcommand("complex", "complex of a squarefree ideal");
    cx->add_option("ideal", opt.input, "ideal file")->required();
    add_common(cx, false, false, false, false, false);

    CLI::App* fv = app.add_subcommand("fvec", "f-vector of a complex");
    fv->add_option("complex", opt.input, "complex file")->required();
    add_common(fv, false, false, false, false, false);

    CLI::App* hv = app.add_subcommand("hvec", "h-vector of a complex");
    hv->add_option("complex", opt.input, "complex file")->required();
    add_common(hv, false, false, false, false, false);

    CLI::App* pol = app.add_subcommand("polarize", "polarization of a monomial ideal");
    pol->add_option("ideal", opt.input, "ideal file")->required();
    add_common(pol, false, false, false, false, false);

    CLI::App* cm = app.add_subcommand("cm-check", "Cohen-Macaulay check over GF(p)");
    cm->add_option("complex", opt.input, "complex file")->required();
    add_common(cm, false, false, false, false, true);

    CLI::App* bc = app.add_subcommand("balanced-check", "balancedness against a partition");
    bc->add_option("complex", opt.input, "complex file")->required();
    bc->add_option("partition", opt.second_input, "partition file")->required();
    add_common(bc, false, false, false, false, false);

    CLI::App* tr = app.add_subcommand("transfer", "balanced-complex transfer pipeline");
    tr->add_option("complex", opt.input, "complex file")->required();
    add_common(tr, true, true, true, false, true);

    try {
        app.parse(argc, argv);
        for (CLI::App* sub : app.get_subcommands()) {
            if (CLI::Option* o = sub->get_option_no_throw("--caps"); o && o->count() > 0)
                opt.caps_given = true;
            if (CLI::Option* o = sub->get_option_no_throw("--char"); o && o->count() > 0)
                char_given = true;
        }
        if (opt.caps_given)
            check_caps(opt.caps);
        if (char_given || cm->parsed()) {
            if (!is_prime(opt.characteristic))
                throw CLI::ValidationError("--char", std::to_string(opt.characteristic) +
                                                         " is not prime");
        }

        if (hilbert->parsed())
            return run_hilbert(opt);
        if (series->parsed())
            return run_series(opt);
        if (height_cmd->parsed())
            return run_height(opt);
        if (rsv->parsed())
            return run_regseq_verify(opt);
        if (rss->parsed())
            return run_regseq_search(opt);
        if (egh_cmd->parsed())
            return run_egh(opt);
        if (eghv->parsed())
            return run_egh_verify(opt);
        if (sr_cmd->parsed())
            return run_sr(opt);
        if (cx->parsed())
            return run_complex(opt);
        if (fv->parsed())
            return run_fvec(opt);
        if (hv->parsed())
            return run_hvec(opt);
        if (pol->parsed())
            return run_polarize(opt);
        if (cm->parsed())
            return run_cm_check(opt);
        if (bc->parsed())
            return run_balanced_check(opt);
        if (tr->parsed())
            return run_transfer(opt, char_given);
        std::cerr << "no command selected\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const search_failure& e) {
        std::cerr << "search failure: " << e.what() << "\n";
        return 1;
    } catch (const infeasible_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
