// entrocone: entropy vectors, information inequalities and entropy-cone
// geometry from the command line. One binary, subcommand style; stdout
// carries the machine-readable result (deterministic for fixed inputs and
// seed), stderr carries timing.

#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "entrocone/batch.hpp"
#include "entrocone/cone.hpp"
#include "entrocone/differential.hpp"
#include "entrocone/json_io.hpp"
#include "entrocone/stabilizer_dense.hpp"
#include "entrocone/typeclasses.hpp"

using namespace entrocone;

namespace {

// FNV-1a, stable digest of the raw input bytes
std::string digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Partition partition_from_arg(const std::string& arg) {
    std::vector<long> parts;
    std::istringstream is(arg);
    std::string tok;
    while (std::getline(is, tok, ',')) parts.push_back(std::stol(tok));
    return Partition(parts);
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~Timer() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cerr << "elapsed_ms=" << ms.count() << "\n";
    }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy vectors, information inequalities and entropy-cone geometry"};
    app.require_subcommand(1);

    double tol = 1e-8;
    std::uint64_t seed = 0;
    std::string format = "json";
    app.add_option("--tol", tol, "violation tolerance")->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized enumeration")->capture_default_str();
    app.add_option("--format", format, "json or csv")->capture_default_str();

    // entropy
    auto* centropy = app.add_subcommand("entropy", "entropy vector of a distribution or density matrix");
    std::string entropy_file;
    bool quantum = false, classical = false;
    centropy->add_option("input", entropy_file, "input JSON file")->required();
    centropy->add_flag("--quantum", quantum, "input is a density matrix");
    centropy->add_flag("--classical", classical, "input is a joint distribution");

    // check
    auto* ccheck = app.add_subcommand("check", "evaluate the inequality catalog on an entropy vector");
    std::string check_file;
    int catalog_n = 0;
    bool with_elemental = false, with_nonshannon = false;
    ccheck->add_option("input", check_file, "entropy vector JSON")->required();
    ccheck->add_option("--catalog", catalog_n, "party count of the catalog (default: the vector's)");
    ccheck->add_flag("--elemental", with_elemental, "also check the elemental Shannon generators");
    ccheck->add_flag("--non-shannon", with_nonshannon, "also check Zhang-Yeung and Ingleton (n=4, classical)");

    // stab
    auto* cstab = app.add_subcommand("stab", "stabilizer entropy vectors from submodule files or enumeration");
    std::string stab_file;
    std::vector<int> enumerate_args;
    std::size_t budget = 100000;
    bool emit_csv = false;
    cstab->add_option("input", stab_file, "submodule text file ('d n' header + generator rows)");
    cstab->add_option("--enumerate", enumerate_args, "enumerate isotropic submodules: n d")->expected(2);
    cstab->add_option("--budget", budget, "enumeration budget")->capture_default_str();
    cstab->add_flag("--emit-csv", emit_csv, "emit CSV (module,subset_mask,entropy_bits)");

    // cone
    auto* ccone = app.add_subcommand("cone", "dualize, reduce or probe a polyhedral cone");
    std::string cone_file, facet_file, points_file;
    bool dualize = false, extremal = false;
    ccone->add_option("input", cone_file, "cone JSON")->required();
    ccone->add_flag("--dualize", dualize, "emit the dual cone");
    ccone->add_flag("--extremal", extremal, "emit the extremal rays");
    ccone->add_option("--facet", facet_file, "functional JSON to certify against --points");
    ccone->add_option("--points", points_file, "JSON array of rational vectors");

    // types
    auto* ctypes = app.add_subcommand("types", "type-class and representation combinatorics");
    std::string types_op;
    std::vector<std::string> types_args;
    long types_k = 1;
    int types_d = 2;
    long types_n = 1;
    double types_eps = 0.1;
    ctypes->add_option("op", types_op, "size | cy | kostka | kron | restrict | aep")->required();
    ctypes->add_option("args", types_args, "operation arguments");
    ctypes->add_option("-k", types_k, "blow-up factor for cy");
    ctypes->add_option("-d", types_d, "dimension for restrict");
    ctypes->add_option("-n", types_n, "string length for aep");
    ctypes->add_option("--eps", types_eps, "L1 radius for aep");

    // rays
    auto* crays = app.add_subcommand("rays", "extremal-ray certification");
    std::string rays_op, rays_file;
    bool rays_classical = false;
    crays->add_option("op", rays_op, "classify")->required();
    crays->add_option("input", rays_file, "density matrix or distribution JSON")->required();
    crays->add_flag("--classical", rays_classical, "input is a joint distribution");

    CLI11_PARSE(app, argc, argv);
    Timer timer;

    try {
        if (*centropy) {
            if (quantum == classical) throw std::invalid_argument("choose exactly one of --quantum / --classical");
            json in = parse_json_file(entropy_file);
            EntropyVector v = quantum ? entropy_vector_quantum(density_from_json(in))
                                      : entropy_vector_classical(distribution_from_json(in));
            emit(entropy_vector_to_json(v));
            return 0;
        }

        if (*ccheck) {
            std::string bytes = read_file(check_file);
            EntropyVector v = entropy_vector_from_json(json::parse(bytes));
            int n = catalog_n > 0 ? catalog_n : v.n;
            if (n != v.n) throw std::invalid_argument("catalog party count does not match the vector");
            std::vector<NamedInequality> catalog = xi_catalog(n);
            if (with_elemental) {
                std::vector<NamedInequality> el = elemental_shannon(n);
                catalog.insert(catalog.end(), el.begin(), el.end());
            }
            if (with_nonshannon && n == 4) {
                catalog.push_back(zhang_yeung());
                catalog.push_back(ingleton());
            }
            std::vector<Violation> bad = catalog_violations({v}, catalog, tol);
            json viols = json::array();
            for (const Violation& b : bad)
                viols.push_back({{"name", catalog[b.functional_index].name},
                                 {"value", b.value},
                                 {"witness", functional_to_json(catalog[b.functional_index].functional)}});
            emit(json{{"command", "check"},
                      {"inputs_digest", digest(bytes)},
                      {"catalog_size", catalog.size()},
                      {"tol", tol},
                      {"violations", viols}});
            return bad.empty() ? 0 : 1;
        }

        if (*cstab) {
            std::vector<Submodule> modules;
            std::string bytes;
            bool truncated = false;
            if (!enumerate_args.empty()) {
                PhaseSpace sp{enumerate_args[0], enumerate_args[1]};
                EnumerationResult en = enumerate_isotropic(sp, budget, seed);
                modules = std::move(en.modules);
                truncated = en.truncated;
                bytes = "enumerate " + std::to_string(sp.n) + " " + std::to_string(sp.d);
            } else if (!stab_file.empty()) {
                bytes = read_file(stab_file);
                Submodule M = submodule_from_text(bytes);
                if (!is_isotropic(M)) {
                    // name an offending generator pair
                    for (std::size_t i = 0; i < M.generators.size(); ++i)
                        for (std::size_t j = i; j < M.generators.size(); ++j)
                            if (symplectic_form(M.generators[i], M.generators[j], M.space) != 0)
                                throw std::invalid_argument("submodule is not isotropic: generators " +
                                                            std::to_string(i) + " and " + std::to_string(j) +
                                                            " have nonzero symplectic product");
                }
                modules.push_back(std::move(M));
            } else {
                throw std::invalid_argument("stab: give a submodule file or --enumerate n d");
            }
            std::vector<EntropyVector> vectors = stabilizer_sweep_parallel(modules);
            if (emit_csv || format == "csv") {
                std::cout.precision(17);
                std::cout << "module,subset_mask,entropy_bits\n";
                for (std::size_t m = 0; m < vectors.size(); ++m)
                    for (Mask I = 0; I < vectors[m].size(); ++I)
                        std::cout << m << ',' << I << ',' << vectors[m][I] << "\n";
            } else {
                json arr = json::array();
                for (std::size_t m = 0; m < vectors.size(); ++m) {
                    json entry = entropy_vector_to_json(vectors[m]);
                    entry["generators"] = submodule_to_text(modules[m]);
                    arr.push_back(std::move(entry));
                }
                emit(json{{"command", "stab"},
                          {"inputs_digest", digest(bytes)},
                          {"count", vectors.size()},
                          {"truncated", truncated},
                          {"results", arr}});
            }
            return 0;
        }

        if (*ccone) {
            std::string bytes = read_file(cone_file);
            PolyCone c = cone_from_json(json::parse(bytes));
            if (dualize) {
                emit(cone_to_json(dual_cone(c)));
                return 0;
            }
            if (extremal) {
                PolyCone out;
                out.n_ambient = c.n_ambient;
                out.generators = extremal_rays(c);
                emit(cone_to_json(out));
                return 0;
            }
            if (!facet_file.empty()) {
                Functional f = functional_from_json(parse_json_file(facet_file));
                RatMat pts;
                if (!points_file.empty()) {
                    for (const auto& row : parse_json_file(points_file)) {
                        RatVec v;
                        for (const auto& x : row)
                            v.push_back(x.is_string() ? rat_from_string(x.get<std::string>()) : Rat(x.get<long>()));
                        pts.push_back(std::move(v));
                    }
                } else if (c.generators) {
                    pts = *c.generators;
                } else {
                    throw std::invalid_argument("facet test needs --points or a cone with generators");
                }
                FacetReport rep = is_facet(f, pts);
                emit(json{{"command", "cone facet"},
                          {"inputs_digest", digest(bytes)},
                          {"facet", rep.facet},
                          {"face_dimension", rep.face_dimension},
                          {"cone_dimension", rep.cone_dimension}});
                return 0;
            }
            throw std::invalid_argument("cone: choose --dualize, --extremal or --facet");
        }

        if (*ctypes) {
            if (types_op == "size") {
                FrequencyVector f;
                f.counts = partition_from_arg(types_args.at(0)).parts;
                emit(json{{"op", "size"}, {"value", type_class_size(f).get_str()}});
            } else if (types_op == "cy") {
                JointDistribution p = distribution_from_json(parse_json_file(types_args.at(0)));
                EntropyVector h = chan_yeung_vector(p, types_k);
                Int q = p.denominator();
                double scale = static_cast<double>(types_k) * q.get_d();
                EntropyVector target = entropy_vector_classical(p);
                double err = 0.0;
                for (std::size_t i = 0; i < h.entries.size(); ++i)
                    err = std::max(err, std::fabs(h.entries[i] / scale - target.entries[i]));
                json out = entropy_vector_to_json(h);
                out["k"] = types_k;
                out["normalized_error"] = err;
                emit(out);
            } else if (types_op == "kostka") {
                Partition shape = partition_from_arg(types_args.at(0));
                Partition content = partition_from_arg(types_args.at(1));
                emit(json{{"op", "kostka"}, {"value", kostka(shape, content.parts).get_str()}});
            } else if (types_op == "kron") {
                Partition lam = partition_from_arg(types_args.at(0));
                Partition mu = partition_from_arg(types_args.at(1));
                Partition nu = partition_from_arg(types_args.at(2));
                emit(json{{"op", "kron"},
                          {"value", classical_kronecker(lam, mu, nu).get_str()},
                          {"compatible", marginal_compatible(lam, mu, nu)}});
            } else if (types_op == "restrict") {
                Partition mu = partition_from_arg(types_args.at(0));
                json etas = json::object();
                for (const auto& [nu, mult] : restriction_multiplicities(mu, types_d)) {
                    std::string key;
                    for (std::size_t i = 0; i < nu.parts.size(); ++i)
                        key += (i ? "," : "") + std::to_string(nu.parts[i]);
                    if (mult != 0) etas[key] = mult.get_str();
                }
                emit(json{{"op", "restrict"}, {"d", types_d}, {"multiplicities", etas}});
            } else if (types_op == "aep") {
                std::vector<double> probs;
                std::istringstream is(types_args.at(0));
                std::string tok;
                while (std::getline(is, tok, ',')) probs.push_back(std::stod(tok));
                emit(json{{"op", "aep"}, {"mass", aep_mass(probs, types_n, types_eps)}});
            } else {
                throw std::invalid_argument("unknown types operation: " + types_op);
            }
            return 0;
        }

        if (*crays) {
            if (rays_op != "classify") throw std::invalid_argument("rays: unknown operation " + rays_op);
            json in = parse_json_file(rays_file);
            if (rays_classical) {
                emit(differential_report_to_json(classical_differential(distribution_from_json(in), tol)));
            } else {
                DensityMatrix rho = density_from_json(in);
                EntropyVector v = entropy_vector_quantum(rho);
                if (v[full_mask(rho.n_parties())] < tol) {
                    // pure input: run the full analytic differential on the
                    // top eigenvector
                    Eigen::SelfAdjointEigenSolver<CMat> es(rho.mat);
                    PureState psi;
                    psi.local_dims = rho.local_dims;
                    psi.amplitudes = es.eigenvectors().col(rho.mat.rows() - 1);
                    psi.amplitudes /= psi.amplitudes.norm();
                    emit(differential_report_to_json(entropy_differential(psi, tol)));
                } else {
                    Classification c = classify_quantum(rho, tol);
                    json out{{"n", rho.n_parties()},
                             {"verdict", verdict_name(c.verdict)},
                             {"degenerate", false}};
                    if (c.verdict == RayVerdict::Splits || c.verdict == RayVerdict::NotExtremalCandidate)
                        out["witness_subset"] = subset_name(c.witness_subset);
                    if (c.verdict == RayVerdict::ExceptionalRay) out["ratio"] = c.ratio;
                    emit(out);
                }
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
