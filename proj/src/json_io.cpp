#include "entrocone/json_io.hpp"

#include <fstream>
#include <sstream>

namespace entrocone {

json entropy_vector_to_json(const EntropyVector& v) {
    json entries = json::object();
    for (Mask I = 0; I <= full_mask(v.n); ++I) entries[subset_name(I)] = v[I];
    return json{{"n", v.n}, {"entries", entries}};
}

EntropyVector entropy_vector_from_json(const json& j) {
    EntropyVector v(j.at("n").get<int>());
    for (const auto& [key, val] : j.at("entries").items()) v[subset_from_name(key, v.n)] = val.get<double>();
    if (v[0] != 0.0) throw std::invalid_argument("entropy vector: entry for the empty set must be 0");
    return v;
}

json functional_to_json(const Functional& f) {
    json coeffs = json::object();
    for (Mask I = 1; I <= full_mask(f.n); ++I)
        if (f[I] != 0) coeffs[subset_name(I)] = rat_to_string(f[I]);
    return json{{"n", f.n}, {"coeffs", coeffs}};
}

Functional functional_from_json(const json& j) {
    Functional f(j.at("n").get<int>());
    for (const auto& [key, val] : j.at("coeffs").items()) {
        Mask I = subset_from_name(key, f.n);
        f[I] = val.is_string() ? rat_from_string(val.get<std::string>()) : Rat(val.get<long>());
    }
    f.drop_empty_coeff();
    return f;
}

json distribution_to_json(const JointDistribution& p) {
    json probs = json::array();
    if (p.rational)
        for (const Rat& q : p.probs_q) probs.push_back(rat_to_string(q));
    else
        for (double x : p.probs_f) probs.push_back(x);
    return json{{"n", p.n_parties}, {"dims", p.alphabet_sizes}, {"probs", probs}};
}

JointDistribution distribution_from_json(const json& j) {
    std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(dims.size()))
        throw std::invalid_argument("distribution: n does not match dims");
    const json& probs = j.at("probs");
    bool rational = !probs.empty() && probs[0].is_string();
    if (rational) {
        std::vector<Rat> p;
        for (const auto& x : probs) p.push_back(rat_from_string(x.get<std::string>()));
        return JointDistribution::from_rationals(std::move(dims), std::move(p));
    }
    std::vector<double> p;
    for (const auto& x : probs) p.push_back(x.get<double>());
    return JointDistribution::from_floats(std::move(dims), std::move(p));
}

json density_to_json(const DensityMatrix& rho) {
    const Eigen::Index D = rho.mat.rows();
    json re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < D; ++i) {
        json rrow = json::array(), irow = json::array();
        for (Eigen::Index k = 0; k < D; ++k) {
            rrow.push_back(rho.mat(i, k).real());
            irow.push_back(rho.mat(i, k).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return json{{"dims", rho.local_dims}, {"re", re}, {"im", im}};
}

DensityMatrix density_from_json(const json& j) {
    DensityMatrix rho;
    rho.local_dims = j.at("dims").get<std::vector<int>>();
    const std::size_t D = product_dim(rho.local_dims);
    const json& re = j.at("re");
    const json& im = j.at("im");
    if (re.size() != D || im.size() != D) throw std::invalid_argument("density matrix: row count mismatch");
    rho.mat = CMat::Zero(static_cast<Eigen::Index>(D), static_cast<Eigen::Index>(D));
    for (std::size_t i = 0; i < D; ++i) {
        if (re[i].size() != D || im[i].size() != D) throw std::invalid_argument("density matrix: column count mismatch");
        for (std::size_t k = 0; k < D; ++k)
            rho.mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                Cplx(re[i][k].get<double>(), im[i][k].get<double>());
    }
    rho.validate();
    return rho;
}

json cone_to_json(const PolyCone& c) {
    json out{{"n_ambient", c.n_ambient}};
    auto matrix_to_json = [](const RatMat& m) {
        json rows = json::array();
        for (const RatVec& r : m) {
            json row = json::array();
            for (const Rat& x : r) row.push_back(rat_to_string(x));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    if (c.generators) out["generators"] = matrix_to_json(*c.generators);
    if (c.halfspaces) out["halfspaces"] = matrix_to_json(*c.halfspaces);
    return out;
}

PolyCone cone_from_json(const json& j) {
    const int dim = j.at("n_ambient").get<int>();
    auto row_from_json = [&](const json& r) {
        RatVec v;
        if (r.is_object()) {
            Functional f = functional_from_json(r);
            if ((std::size_t(1) << f.n) != static_cast<std::size_t>(dim))
                throw std::invalid_argument("cone: functional size does not match ambient dimension");
            v = f.coeffs;
        } else {
            for (const auto& x : r) v.push_back(x.is_string() ? rat_from_string(x.get<std::string>()) : Rat(x.get<long>()));
        }
        if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("cone: row length mismatch");
        return v;
    };
    PolyCone c;
    c.n_ambient = dim;
    if (j.contains("generators")) {
        RatMat g;
        for (const auto& r : j.at("generators")) g.push_back(row_from_json(r));
        c = PolyCone::from_generators(dim, std::move(g));
    }
    if (j.contains("halfspaces")) {
        RatMat h;
        for (const auto& r : j.at("halfspaces")) h.push_back(row_from_json(r));
        if (c.generators) {
            PolyCone hc = PolyCone::from_halfspaces(dim, std::move(h));
            c.halfspaces = hc.halfspaces;
        } else {
            c = PolyCone::from_halfspaces(dim, std::move(h));
        }
    }
    if (!c.generators && !c.halfspaces) throw std::invalid_argument("cone: need generators or halfspaces");
    return c;
}

json differential_report_to_json(const DifferentialReport& rep) {
    json subsets = json::array();
    for (std::size_t s = 0; s < rep.subsets.size(); ++s) {
        json entry{{"subset", subset_name(rep.subsets[s])},
                   {"flat", static_cast<bool>(rep.flat[s])},
                   {"levels", rep.levels[s]}};
        if (!rep.degenerate && s < rep.rows.size()) entry["differential"] = rep.rows[s];
        subsets.push_back(std::move(entry));
    }
    json out{{"n", rep.n},
             {"subsets", subsets},
             {"rank", rep.rank},
             {"degenerate", rep.degenerate},
             {"verdict", verdict_name(rep.verdict)}};
    if (rep.degenerate) out["degenerate_subset"] = subset_name(rep.degenerate_subset);
    // the rows are coordinates over this basis; ship it so the numbers are
    // reproducible (column 2b is the direction, column 2b+1 is i times it)
    if (!rep.tangent_basis.empty()) {
        json basis = json::array();
        for (const CVec& b : rep.tangent_basis) {
            json re = json::array(), im = json::array();
            for (Eigen::Index j = 0; j < b.size(); ++j) {
                re.push_back(b(j).real());
                im.push_back(b(j).imag());
            }
            basis.push_back(json{{"re", re}, {"im", im}});
        }
        out["tangent_basis"] = std::move(basis);
    }
    return out;
}

Submodule submodule_from_text(const std::string& text) {
    std::istringstream is(text);
    int d = 0, n = 0;
    if (!(is >> d >> n)) throw std::invalid_argument("submodule file: expected header 'd n'");
    if (d < 2 || n < 1) throw std::invalid_argument("submodule file: need d >= 2 and n >= 1");
    PhaseSpace space{n, d};
    ZMat rows;
    long x;
    ZVec cur;
    while (is >> x) {
        cur.push_back(x);
        if (static_cast<int>(cur.size()) == space.coords()) {
            rows.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) throw std::invalid_argument("submodule file: trailing coordinates do not fill a row of length 2n");
    return canonicalize(rows, space);
}

std::string submodule_to_text(const Submodule& M) {
    std::ostringstream os;
    os << M.space.d << ' ' << M.space.n << '\n';
    for (const ZVec& r : M.generators) {
        for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j];
        os << '\n';
    }
    return os.str();
}

SubspaceFamily family_from_text(const std::string& text) {
    std::istringstream is(text);
    long p = 0;
    int m = 0, n = 0;
    if (!(is >> p >> m >> n)) throw std::invalid_argument("family file: expected header 'p m n'");
    SubspaceFamily fam;
    fam.p = p;
    fam.ambient = m;
    for (int i = 0; i < n; ++i) {
        int rows = 0;
        if (!(is >> rows)) throw std::invalid_argument("family file: missing row count for a subspace");
        FpMat U;
        for (int r = 0; r < rows; ++r) {
            std::vector<long> row(static_cast<std::size_t>(m));
            for (int c = 0; c < m; ++c)
                if (!(is >> row[static_cast<std::size_t>(c)]))
                    throw std::invalid_argument("family file: truncated basis row");
            U.push_back(std::move(row));
        }
        fam.subspaces.push_back(rref_mod_p(U, p));
    }
    fam.validate();
    return fam;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    std::string s = os.str();
    if (s.empty()) throw std::runtime_error("empty file: " + path);
    return s;
}

json parse_json_file(const std::string& path) {
    std::string text = read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error("JSON parse error in " + path + " at byte " + std::to_string(e.byte) + ": " +
                                 e.what());
    }
}

}  // namespace entrocone
