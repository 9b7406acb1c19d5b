#include "nomad/backends/embedding.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "nomad/text_util.hpp"

namespace nomad {

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.empty()) {
        throw std::invalid_argument("cosine_similarity: dimension mismatch");
    }
    double dot = 0, na = 0, nb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0 || nb == 0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

std::vector<double> EmbeddingBackend::embed_one(const std::string& text) {
    return embed({text}).front();
}

std::vector<std::vector<double>> HashEmbeddingBackend::embed(const std::vector<std::string>& texts) {
    std::vector<std::vector<double>> out;
    out.reserve(texts.size());
    for (const auto& text : texts) {
        std::mt19937_64 rng(seed_ ^ fnv1a(text));
        std::vector<double> v(dim_);
        for (int i = 0; i < dim_; i += 2) {
            // Box-Muller from explicit uniforms.
            double u1 = (static_cast<double>(rng() >> 11) + 0.5) / 9007199254740992.0;
            double u2 = (static_cast<double>(rng() >> 11) + 0.5) / 9007199254740992.0;
            double r = std::sqrt(-2.0 * std::log(u1));
            v[i] = r * std::cos(2.0 * M_PI * u2);
            if (i + 1 < dim_) v[i + 1] = r * std::sin(2.0 * M_PI * u2);
        }
        double norm = 0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : v) x /= norm;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<double>> StaticEmbeddingBackend::embed(const std::vector<std::string>& texts) {
    std::vector<std::vector<double>> out;
    out.reserve(texts.size());
    for (const auto& text : texts) {
        auto it = table_.find(text);
        if (it != table_.end()) {
            out.push_back(it->second);
        } else if (fallback_) {
            out.push_back(fallback_->embed_one(text));
        } else {
            throw std::runtime_error("StaticEmbeddingBackend: no vector for text: " + text);
        }
    }
    return out;
}

}  // namespace nomad
