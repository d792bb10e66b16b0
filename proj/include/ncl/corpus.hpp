#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "ncl/lax.hpp"
#include "ncl/rng.hpp"

namespace ncl {

struct CorpusEntry {
    std::string name;
    std::string pres_spec;
    PresPtr pres;
    Matrix<Element> m;
    bool expect_manin = true;
};

namespace corpus_detail {

/// Cartier-Foata matrix over weyl(n, n): row i draws only from site-i
/// generators, so distinct rows commute.
inline Matrix<Element> cartier_foata_sample(Rng& rng, const PresPtr& pres, int n) {
    Matrix<Element> m(n, n, Element::zero(pres));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Element qe = lax_detail::qgen(pres, ((j + i) % n) + 1, i);
            Element pe = lax_detail::pgen(pres, j, i);
            Element entry = Element::scalar(pres, rng.rational(3, 2));
            entry += qe.scaled(rng.rational(2, 1));
            entry += pe.scaled(rng.rational(2, 1));
            // quadratic entries only at n = 2: they keep 2x2 samples generic
            // while high powers of 3x3 matrices stay desk-sized
            if (n == 2 && rng.range(0, 1)) entry += (qe * pe).scaled(rng.nonzero_rational(2, 1));
            m.at(i - 1, j - 1) = entry;
        }
    return m;
}

inline Matrix<Element> commutative_sample(Rng& rng, const PresPtr& pres, int n) {
    Matrix<Element> m(n, n, Element::zero(pres));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Element entry = Element::with_coeff(pres, rng.ratfun(1));
            if (rng.range(0, 1))
                entry += lax_detail::qgen(pres, (i % pres->n()) + 1, 1).scaled(rng.rational(2, 1));
            m.at(i, j) = entry;
        }
    return m;
}

}  // namespace corpus_detail

/// Deterministic regression corpus: Manin positives (Cartier-Foata over the
/// Weyl algebra, Gaudin operator slices, commutative controls, a Yangian
/// shift form) and non-Manin negatives, for sizes n = 2, 3. Reproducible
/// from the seed; negatives are verified non-Manin at generation time.
inline std::vector<CorpusEntry> corpus_generate(uint64_t seed, int positives_per_size = 5,
                                                int negatives_per_size = 3) {
    std::vector<CorpusEntry> out;
    Rng rng(seed);
    for (int n = 2; n <= 3; ++n) {
        std::string sz = std::to_string(n);
        PresPtr wn = Presentation::weyl(n, n);
        PresPtr cn = Presentation::commutative(n, 1);
        LaxModel g = gaudin_simplest(n, 1);
        LaxModel y = yangian_xxx_simplest(n, 1);

        std::vector<std::pair<std::string, std::function<CorpusEntry()>>> builders = {
            {"cf", [&] {
                 return CorpusEntry{"", wn->spec_string(), wn,
                                    corpus_detail::cartier_foata_sample(rng, wn, n), true};
             }},
            {"comm", [&] {
                 return CorpusEntry{"", cn->spec_string(), cn,
                                    corpus_detail::commutative_sample(rng, cn, n), true};
             }},
            {"gaudinop", [&] {
                 return CorpusEntry{"", g.pres->spec_string(), g.pres, gaudin_operator(g.M), true};
             }},
            {"gaudinop_t", [&] {
                 return CorpusEntry{"", g.pres->spec_string(), g.pres,
                                    gaudin_operator(g.M, +1, true), true};
             }},
            {"yangop", [&] {
                 return CorpusEntry{"", y.pres->spec_string(), y.pres,
                                    yangian_operator(y.M, YangForm::TSinv), true};
             }},
        };
        for (int i = 0; i < positives_per_size; ++i) {
            auto& [tag, build] = builders[static_cast<size_t>(i) % builders.size()];
            CorpusEntry e = build();
            e.name = tag + sz + "_" + std::to_string(i);
            out.push_back(std::move(e));
        }

        for (int i = 0; i < negatives_per_size; ++i) {
            Matrix<Element> neg(n, n, Element::one(wn));
            std::string tag;
            switch (i % 3) {
                case 0:
                    // rows of q's over rows of p's: same-column commutators
                    // fail and the column determinant is order dependent
                    tag = "neg_qp";
                    for (int j = 0; j < n; ++j) {
                        neg.at(0, j) = lax_detail::qgen(wn, 1, 1);
                        neg.at(1, j) = lax_detail::pgen(wn, 1, 1);
                    }
                    break;
                case 1:
                    // [[q,p],[p,q]] block embedded in the identity
                    tag = "neg_cross";
                    neg = Matrix<Element>::identity(n, Element::one(wn));
                    neg.at(0, 0) = lax_detail::qgen(wn, 1, 1);
                    neg.at(0, 1) = lax_detail::pgen(wn, 1, 1);
                    neg.at(1, 0) = lax_detail::pgen(wn, 1, 1);
                    neg.at(1, 1) = lax_detail::qgen(wn, 1, 1);
                    break;
                default:
                    // Cartier-Foata sample broken by mixing site-1 generators
                    // into a second row
                    tag = "neg_mixed";
                    for (int tries = 0;; ++tries) {
                        neg = corpus_detail::cartier_foata_sample(rng, wn, n);
                        neg.at(1, 0) += lax_detail::qgen(wn, 1, 1) * lax_detail::pgen(wn, 1, 1) +
                                        lax_detail::pgen(wn, 1, 1);
                        if (!is_manin(neg).ok) break;
                        if (tries > 16) throw std::logic_error("corpus: negative refuses to fail");
                    }
            }
            if (is_manin(neg).ok) throw std::logic_error("corpus: negative sample is Manin");
            out.push_back({tag + sz + "_" + std::to_string(i), wn->spec_string(), wn, neg, false});
        }
    }
    return out;
}

inline std::string matrix_to_text(const Matrix<Element>& m) {
    std::string s;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) s += " ; ";
            s += m.at(i, j).str();
        }
        s += "\n";
    }
    return s;
}

inline Matrix<Element> matrix_from_text(const std::string& text, const PresPtr& pres) {
    std::vector<std::vector<Element>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Element> row;
        size_t start = 0;
        while (start <= line.size()) {
            size_t sep = line.find(';', start);
            std::string cell =
                sep == std::string::npos ? line.substr(start) : line.substr(start, sep - start);
            row.push_back(parse_element(cell, pres));
            if (sep == std::string::npos) break;
            start = sep + 1;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("matrix text: no rows");
    Matrix<Element> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()),
                      Element::zero(pres));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw std::invalid_argument("matrix text: ragged rows");
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return m;
}

/// Write manifest.txt plus one .mtx file per matrix. Deterministic: the same
/// entries produce byte-identical files.
inline void corpus_write(const std::string& dir, const std::vector<CorpusEntry>& entries) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::ofstream manifest(dir + "/manifest.txt");
    for (const auto& e : entries) {
        std::string file = e.name + ".mtx";
        manifest << e.name << " | " << e.pres_spec << " | "
                 << (e.expect_manin ? "manin" : "notmanin") << " | " << file << "\n";
        std::ofstream mf(dir + "/" + file);
        mf << matrix_to_text(e.m);
    }
}

inline std::vector<CorpusEntry> corpus_load(const std::string& dir) {
    std::ifstream manifest(dir + "/manifest.txt");
    if (!manifest) throw std::invalid_argument("cannot open corpus manifest in " + dir);
    std::vector<CorpusEntry> out;
    std::string line;
    auto strip = [](std::string s) {
        size_t b = s.find_first_not_of(" \t\r");
        size_t e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(manifest, line)) {
        if (strip(line).empty()) continue;
        std::vector<std::string> parts;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, '|')) parts.push_back(strip(tok));
        if (parts.size() != 4) throw std::invalid_argument("bad manifest line: " + line);
        PresPtr pres = presentation_from_spec(parts[1]);
        std::ifstream mf(dir + "/" + parts[3]);
        if (!mf) throw std::invalid_argument("missing corpus file: " + parts[3]);
        std::stringstream buf;
        buf << mf.rdbuf();
        out.push_back({parts[0], parts[1], pres, matrix_from_text(buf.str(), pres),
                       parts[2] == "manin"});
    }
    return out;
}

}  // namespace ncl
