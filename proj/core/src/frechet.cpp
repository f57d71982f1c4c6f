// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include "spheremetric/frechet.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string_view>

#include <Eigen/Dense>

#include "spheremetric/errors.hpp"

namespace spheremetric {

GaussianStats estimate_gaussian(const std::vector<FeatureVector>& features) {
    const std::int64_t n = static_cast<std::int64_t>(features.size());
    if (n < 2)
        throw InvalidInputError("estimate_gaussian: need at least 2 samples, got " +
                                std::to_string(n));
    const int d = features.front().dim();
    for (const FeatureVector& f : features)
        if (f.dim() != d)
            throw InvalidInputError("estimate_gaussian: mixed feature dimensions (" +
                                    std::to_string(d) + " vs " + std::to_string(f.dim()) + ")");

    Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
    for (const FeatureVector& f : features)
        for (int i = 0; i < d; ++i) {
            const float v = f.values[i];
            if (!std::isfinite(v))
                throw NumericError("estimate_gaussian: non-finite feature entry");
            mean[i] += v;
        }
    mean /= static_cast<double>(n);

    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
    Eigen::VectorXd centered(d);
    for (const FeatureVector& f : features) {
        for (int i = 0; i < d; ++i)
            centered[i] = f.values[i] - mean[i];
        cov.noalias() += centered * centered.transpose();
    }
    cov /= static_cast<double>(n - 1);
    cov = ((cov + cov.transpose()) * 0.5).eval();

    return {std::move(mean), std::move(cov), n};
}

namespace {

void require_symmetric(const Eigen::MatrixXd& m, const char* where) {
    if (m.rows() != m.cols())
        throw InvalidInputError(std::string(where) + ": matrix is not square");
    const double scale = m.cwiseAbs().maxCoeff();
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-9 * std::max(scale, 1.0))
        throw InvalidInputError(std::string(where) + ": matrix is not symmetric (asymmetry " +
                                std::to_string(asym) + ")");
}

// Eigendecomposition with PSD-noise clamping: slightly negative eigenvalues
// are zeroed, clearly negative ones are rejected.
void psd_eigs(const Eigen::MatrixXd& m, Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& es,
              Eigen::VectorXd& eigs, const char* where) {
    es.compute(m);
    if (es.info() != Eigen::Success)
        throw NumericError(std::string(where) + ": eigensolver failed on a " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    eigs = es.eigenvalues();
    const double lmax = std::max(eigs.maxCoeff(), 0.0);
    const double tol = 1e-8 * std::max(lmax, 1e-30) + 1e-12;
    for (int i = 0; i < eigs.size(); ++i) {
        if (eigs[i] < -tol)
            throw InvalidInputError(std::string(where) + ": matrix is not PSD (eigenvalue " +
                                    std::to_string(eigs[i]) + ")");
        if (eigs[i] < 0.0)
            eigs[i] = 0.0;
    }
}

} // namespace

double trace_sqrt_product(const Eigen::MatrixXd& s1, const Eigen::MatrixXd& s2) {
    require_symmetric(s1, "trace_sqrt_product");
    require_symmetric(s2, "trace_sqrt_product");
    if (s1.rows() != s2.rows())
        throw InvalidInputError("trace_sqrt_product: dimension mismatch (" +
                                std::to_string(s1.rows()) + " vs " + std::to_string(s2.rows()) + ")");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    Eigen::VectorXd eigs;
    psd_eigs(s1, es, eigs, "trace_sqrt_product");
    const Eigen::MatrixXd sqrt1 =
        es.eigenvectors() * eigs.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();

    Eigen::MatrixXd inner = sqrt1 * s2 * sqrt1;
    inner = ((inner + inner.transpose()) * 0.5).eval();
    psd_eigs(inner, es, eigs, "trace_sqrt_product");
    return eigs.cwiseSqrt().sum();
}

double frechet_distance(const GaussianStats& g1, const GaussianStats& g2) {
    if (g1.dim() != g2.dim())
        throw InvalidInputError("frechet_distance: dimension mismatch (" +
                                std::to_string(g1.dim()) + " vs " + std::to_string(g2.dim()) + ")");
    const double mean_term = (g1.mean - g2.mean).squaredNorm();
    const double tsp = trace_sqrt_product(g1.covariance, g2.covariance);
    const double d = mean_term + g1.covariance.trace() + g2.covariance.trace() - 2.0 * tsp;

    const double tol =
        1e-9 * std::max(1.0, std::abs(g1.covariance.trace()) + std::abs(g2.covariance.trace()));
    if (d < -tol)
        throw NumericError("frechet_distance: distance " + std::to_string(d) +
                           " is negative beyond numeric tolerance");
    return std::abs(d) <= tol ? 0.0 : d;
}

double fid(const std::vector<Image>& set_a, const std::vector<Image>& set_b,
           const FeatureExtractor& extractor) {
    if (set_a.size() < 2 || set_b.size() < 2)
        throw InvalidInputError("fid: each set needs at least 2 images");
    const GaussianStats ga = estimate_gaussian(extractor.extract(set_a));
    const GaussianStats gb = estimate_gaussian(extractor.extract(set_b));
    return frechet_distance(ga, gb);
}

const char* to_string(ViewGroup g) {
    switch (g) {
    case ViewGroup::Frontal: return "frontal";
    case ViewGroup::Up: return "up";
    case ViewGroup::Down: return "down";
    }
    return "?";
}

std::array<FeatureVector, 3> group_features(const std::array<FeatureVector, 6>& per_face) {
    const int d = per_face[0].dim();
    for (const FeatureVector& f : per_face)
        if (f.dim() == 0 || f.dim() != d)
            throw InvalidInputError("group_features: all six faces must carry features of one "
                                    "dimension");

    FeatureVector frontal;
    frontal.values.resize(d);
    for (int i = 0; i < d; ++i) {
        double acc = 0.0;
        for (FaceLabel f : {FaceLabel::F, FaceLabel::R, FaceLabel::B, FaceLabel::L})
            acc += per_face[static_cast<int>(f)].values[i];
        frontal.values[i] = static_cast<float>(acc / 4.0);
    }

    return {std::move(frontal), per_face[static_cast<int>(FaceLabel::U)],
            per_face[static_cast<int>(FaceLabel::D)]};
}

OmniFidReport omnifid_from_grouped(const GroupedFeatures& a, const GroupedFeatures& b) {
    if (a.size() < 2 || b.size() < 2)
        throw InvalidInputError("omnifid: each dataset needs at least 2 cubemaps");
    OmniFidReport rep;
    double acc = 0.0;
    for (ViewGroup g : {ViewGroup::Frontal, ViewGroup::Up, ViewGroup::Down}) {
        const int gi = static_cast<int>(g);
        std::vector<FeatureVector> fa, fb;
        fa.reserve(a.size());
        fb.reserve(b.size());
        for (const auto& row : a)
            fa.push_back(row[gi]);
        for (const auto& row : b)
            fb.push_back(row[gi]);
        const double d = frechet_distance(estimate_gaussian(fa), estimate_gaussian(fb));
        switch (g) {
        case ViewGroup::Frontal: rep.fid_bar_frontal = d; break;
        case ViewGroup::Up: rep.fid_bar_up = d; break;
        case ViewGroup::Down: rep.fid_bar_down = d; break;
        }
        acc += d;
    }
    rep.omnifid = acc / 3.0;
    return rep;
}

namespace {

GroupedFeatures grouped_features_of(const std::vector<Image>& images,
                                    const FeatureExtractor& extractor, int face_size) {
    GroupedFeatures rows;
    rows.reserve(images.size());
    for (const Image& img : images) {
        const int fs = face_size > 0 ? face_size : default_face_size(img);
        const CubemapSet cm = equirect_to_cubemap(img, fs);
        std::vector<Image> faces(cm.faces.begin(), cm.faces.end());
        std::vector<FeatureVector> feats = extractor.extract(faces);
        std::array<FeatureVector, 6> per_face;
        for (int i = 0; i < 6; ++i)
            per_face[i] = std::move(feats[i]);
        rows.push_back(group_features(per_face));
    }
    return rows;
}

} // namespace

OmniFidReport omnifid(const std::vector<Image>& set_a, const std::vector<Image>& set_b,
                      const FeatureExtractor& extractor, int face_size) {
    return omnifid_from_grouped(grouped_features_of(set_a, extractor, face_size),
                                grouped_features_of(set_b, extractor, face_size));
}

namespace {

constexpr char kStatsMagic[4] = {'S', 'M', 'G', 'S'};
constexpr std::uint32_t kStatsVersion = 1;

void write_u32(std::ostream& os, std::uint32_t v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

void write_u64(std::ostream& os, std::uint64_t v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

void write_string(std::ostream& os, const std::string& s) {
    write_u32(os, static_cast<std::uint32_t>(s.size()));
    os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::uint32_t read_u32(std::istream& is) {
    std::uint32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
}

std::uint64_t read_u64(std::istream& is) {
    std::uint64_t v = 0;
    is.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
}

std::string read_string(std::istream& is) {
    const std::uint32_t n = read_u32(is);
    std::string s(n, '\0');
    is.read(s.data(), n);
    return s;
}

} // namespace

void save_stats(const StatsFile& sf, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw DatasetError("save_stats: cannot open " + path.string());
    os.write(kStatsMagic, 4);
    write_u32(os, kStatsVersion);
    write_string(os, sf.extractor_name);
    write_string(os, sf.preprocessing);
    const int d = sf.stats.dim();
    write_u32(os, static_cast<std::uint32_t>(d));
    write_u64(os, static_cast<std::uint64_t>(sf.stats.sample_count));
    os.write(reinterpret_cast<const char*>(sf.stats.mean.data()),
             static_cast<std::streamsize>(sizeof(double) * d));
    os.write(reinterpret_cast<const char*>(sf.stats.covariance.data()),
             static_cast<std::streamsize>(sizeof(double) * d * d));
    if (!os)
        throw DatasetError("save_stats: write failed for " + path.string());
}

StatsFile load_stats(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw DatasetError("load_stats: cannot open " + path.string());
    char magic[4] = {};
    is.read(magic, 4);
    if (!is || std::string_view(magic, 4) != std::string_view(kStatsMagic, 4))
        throw DatasetError("load_stats: not a stats file: " + path.string());
    const std::uint32_t version = read_u32(is);
    if (version != kStatsVersion)
        throw DatasetError("load_stats: unsupported version " + std::to_string(version));
    StatsFile sf;
    sf.extractor_name = read_string(is);
    sf.preprocessing = read_string(is);
    const std::uint32_t d = read_u32(is);
    sf.stats.sample_count = static_cast<std::int64_t>(read_u64(is));
    sf.stats.mean.resize(d);
    sf.stats.covariance.resize(d, d);
    is.read(reinterpret_cast<char*>(sf.stats.mean.data()),
            static_cast<std::streamsize>(sizeof(double) * d));
    is.read(reinterpret_cast<char*>(sf.stats.covariance.data()),
            static_cast<std::streamsize>(sizeof(double) * d * d));
    if (!is)
        throw DatasetError("load_stats: truncated stats file: " + path.string());
    return sf;
}

} // namespace spheremetric
