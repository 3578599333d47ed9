#include "umato/datasets.hpp"
#include "umato/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>

using namespace umato;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "umato_dataset_tests";
    fs::create_directories(dir);
    return dir / name;
}

fs::path write_bytes(const std::string& name, const std::vector<unsigned char>& bytes) {
    const auto p = temp_file(name);
    std::ofstream f(p, std::ios::binary);
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    return p;
}

fs::path write_text(const std::string& name, const std::string& text) {
    const auto p = temp_file(name);
    std::ofstream(p) << text;
    return p;
}

void push_be32(std::vector<unsigned char>& b, std::uint32_t v) {
    b.push_back(static_cast<unsigned char>(v >> 24));
    b.push_back(static_cast<unsigned char>(v >> 16));
    b.push_back(static_cast<unsigned char>(v >> 8));
    b.push_back(static_cast<unsigned char>(v));
}

// Two 2x2 images and their labels, written out byte by byte.
std::vector<unsigned char> idx_images() {
    return {0x00, 0x00, 0x08, 0x03, 0x00, 0x00, 0x00, 0x02, 0x00, 0x00, 0x00, 0x02, 0x00, 0x00, 0x00, 0x02,
            0x00, 0xff, 0x33, 0x66, 0xcc, 0x99, 0x00, 0xff};
}

std::vector<unsigned char> idx_labels() { return {0x00, 0x00, 0x08, 0x01, 0x00, 0x00, 0x00, 0x02, 0x07, 0x03}; }

template <typename F>
std::size_t format_error_location(F f) {
    try {
        f();
    } catch (const FormatError& e) {
        return e.location();
    }
    ADD_FAILURE() << "expected FormatError";
    return 0;
}

} // namespace

TEST(Spheres, ShapeAndClassSizes) {
    Matrix centers;
    const auto ds = generate_spheres(0, {}, &centers);
    ASSERT_EQ(ds.data.size(), 10000u);
    ASSERT_EQ(ds.data.dim(), 101u);
    ASSERT_EQ(centers.rows(), 10);
    std::map<int, int> counts;
    for (auto l : *ds.data.labels()) ++counts[l];
    ASSERT_EQ(counts.size(), 11u);
    for (int c = 0; c < 10; ++c) EXPECT_EQ(counts[c], 500);
    EXPECT_EQ(counts[10], 5000);
}

TEST(Spheres, PointsLieOnTheirSpheres) {
    Matrix centers;
    const auto ds = generate_spheres(1, {}, &centers);
    const auto& x = ds.data.points();
    const auto& labels = *ds.data.labels();
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        const int l = labels[static_cast<std::size_t>(i)];
        if (l == 10) {
            EXPECT_NEAR(x.row(i).norm(), 25.0, 1e-9);
        } else {
            EXPECT_NEAR((x.row(i) - centers.row(l)).norm(), 5.0, 1e-9);
            EXPECT_LE(x.row(i).norm(), 5.0 + centers.row(l).norm() + 1e-9);
        }
    }
}

TEST(Spheres, ClassMeansApproachCenters) {
    // A uniform point on a radius-5 sphere has E|x - c|^2 = 25, so the mean
    // of 500 points is off by about 5/sqrt(500) in norm.
    Matrix centers;
    const auto ds = generate_spheres(2, {}, &centers);
    const auto& x = ds.data.points();
    for (Eigen::Index c = 0; c < 10; ++c) {
        const Eigen::RowVectorXd mean = x.middleRows(c * 500, 500).colwise().mean();
        EXPECT_LE((mean - centers.row(c)).norm(), 3.0 * 5.0 / std::sqrt(500.0));
    }
}

TEST(Spheres, ReproduciblePerSeed) {
    SpheresOptions small;
    small.inner_points = 20;
    small.outer_points = 50;
    EXPECT_TRUE(generate_spheres(5, small).data.points() == generate_spheres(5, small).data.points());
    EXPECT_FALSE(generate_spheres(5, small).data.points() == generate_spheres(6, small).data.points());
}

TEST(Idx, HandCraftedFixture) {
    const auto ds = load_idx(write_bytes("img.idx", idx_images()), write_bytes("lab.idx", idx_labels()));
    ASSERT_EQ(ds.data.size(), 2u);
    ASSERT_EQ(ds.data.dim(), 4u);
    const std::vector<double> expected{0, 1, 0.2, 0.4, 0.8, 0.6, 0, 1};
    for (std::size_t i = 0; i < 8; ++i)
        EXPECT_NEAR(ds.data.points()(static_cast<Eigen::Index>(i / 4), static_cast<Eigen::Index>(i % 4)), expected[i], 1e-15);
    EXPECT_EQ(*ds.data.labels(), (Labels{7, 3}));
}

TEST(Idx, WrongMagic) {
    auto img = idx_images();
    img[3] = 0x01;
    const auto p = write_bytes("bad_magic.idx", img);
    const auto l = write_bytes("lab2.idx", idx_labels());
    EXPECT_EQ(format_error_location([&] { load_idx(p, l); }), 0u);
}

TEST(Idx, CountMismatch) {
    auto lab = idx_labels();
    lab[7] = 0x03;
    lab.push_back(0x01);
    const auto p = write_bytes("img3.idx", idx_images());
    const auto l = write_bytes("lab3.idx", lab);
    EXPECT_EQ(format_error_location([&] { load_idx(p, l); }), 4u);
}

TEST(Idx, Truncated) {
    auto img = idx_images();
    img.pop_back();
    const auto p = write_bytes("short.idx", img);
    const auto l = write_bytes("lab4.idx", idx_labels());
    EXPECT_EQ(format_error_location([&] { load_idx(p, l); }), img.size());
    std::vector<unsigned char> header_only;
    push_be32(header_only, 0x803);
    push_be32(header_only, 1);
    const auto h = write_bytes("header.idx", header_only);
    EXPECT_EQ(format_error_location([&] { load_idx(h, l); }), 8u);
}

TEST(Idx, MissingFileNamesPath) {
    try {
        load_idx("/nonexistent/images.idx", "/nonexistent/labels.idx");
        FAIL();
    } catch (const IoError& e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent/images.idx"), std::string::npos);
    }
}

TEST(Csv, PlainNumbers) {
    const auto ds = load_csv(write_text("plain.csv", "1.0,2.0\n3.0,4.0"), false);
    ASSERT_EQ(ds.data.size(), 2u);
    ASSERT_EQ(ds.data.dim(), 2u);
    EXPECT_EQ(ds.data.points()(1, 0), 3.0);
    EXPECT_FALSE(ds.data.has_labels());
}

TEST(Csv, HeaderAndLabels) {
    const auto ds = load_csv(write_text("labeled.csv", "a,b,label\r\n1,2,0\r\n3,4,2\r\n\r\n"), true);
    ASSERT_EQ(ds.data.size(), 2u);
    ASSERT_EQ(ds.data.dim(), 2u);
    EXPECT_EQ(*ds.data.labels(), (Labels{0, 2}));
}

TEST(Csv, ErrorsCarryLineNumbers) {
    EXPECT_EQ(format_error_location([] { load_csv(write_text("ragged.csv", "x,y\n1,2\n3\n"), false); }), 3u);
    EXPECT_EQ(format_error_location([] { load_csv(write_text("text.csv", "1,2\n3,abc\n"), false); }), 2u);
    EXPECT_EQ(format_error_location([] { load_csv(write_text("badlabel.csv", "1,2\n3,0.5\n"), true); }), 2u);
    EXPECT_THROW(load_csv(write_text("empty.csv", ""), false), FormatError);
    EXPECT_THROW(load_csv(write_text("header_only.csv", "x,y\n"), false), FormatError);
    EXPECT_THROW(load_csv(temp_file("missing.csv"), false), IoError);
}

TEST(Csv, EmbeddingRoundTrip) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g(0.0, 50.0);
    Matrix e(100, 2);
    Labels labels(100);
    for (Eigen::Index i = 0; i < 100; ++i) {
        e(i, 0) = g(rng);
        e(i, 1) = g(rng) * 1e-3;
        labels[static_cast<std::size_t>(i)] = static_cast<int>(i % 7);
    }
    const auto p = temp_file("emb.csv");
    save_embedding(e, labels, p);
    std::ifstream in(p);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "x,y,label");
    const auto back = load_csv(p, true);
    EXPECT_LT((back.data.points() - e).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_EQ(*back.data.labels(), labels);

    save_embedding(e, std::nullopt, p);
    EXPECT_FALSE(load_csv(p, false).data.has_labels());
}

TEST(Csv, DatasetRoundTripIsExact) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    Matrix x(20, 5);
    for (Eigen::Index i = 0; i < 20; ++i)
        for (Eigen::Index c = 0; c < 5; ++c) x(i, c) = u(rng);
    const auto p = temp_file("data.csv");
    save_dataset(Dataset(x, Labels(20, 1)), p);
    const auto back = load_csv(p, true);
    EXPECT_TRUE(back.data.points() == x);
}

TEST(Subsample, FullSizeKeepsContent) {
    SpheresOptions small;
    small.inner_points = 10;
    small.outer_points = 30;
    const auto ds = generate_spheres(0, small);
    const auto s = subsample(ds, ds.data.size(), 9);
    EXPECT_TRUE(s.data.points() == ds.data.points());
    EXPECT_EQ(*s.data.labels(), *ds.data.labels());
}

TEST(Subsample, ProportionsWithinOnePoint) {
    const auto ds = generate_spheres(0);
    for (std::size_t m : {2000u, 1000u, 333u}) {
        const auto idx = subsample_indices(ds.data, m, 11);
        ASSERT_EQ(idx.size(), m);
        EXPECT_TRUE(std::is_sorted(idx.begin(), idx.end()));
        std::map<int, double> counts;
        for (auto i : idx) counts[(*ds.data.labels())[static_cast<std::size_t>(i)]] += 1;
        for (int c = 0; c <= 10; ++c) {
            const double expected = static_cast<double>(m) * (c == 10 ? 0.5 : 0.05);
            EXPECT_LE(std::abs(counts[c] - expected), 1.0) << "class " << c << " m=" << m;
        }
    }
}

TEST(Subsample, DeterministicAndValidated) {
    const auto ds = generate_spheres(0);
    EXPECT_EQ(subsample_indices(ds.data, 500, 3), subsample_indices(ds.data, 500, 3));
    EXPECT_NE(subsample_indices(ds.data, 500, 3), subsample_indices(ds.data, 500, 4));
    EXPECT_THROW(subsample(ds, 10001, 0), InvalidParameter);
}
