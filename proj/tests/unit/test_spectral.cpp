#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fsg/error.hpp"
#include "fsg/spectral.hpp"
#include "support/oracles.hpp"

namespace fsg {
namespace {

using std::numbers::pi;

GridSpec square(std::size_t n) { return GridSpec::cube(2, {0.0, 2.0 * pi}, n); }

std::size_t flat_index(const GridSpec& g, std::initializer_list<long> k) {
  std::size_t flat = 0;
  int i = 0;
  for (long ki : k) {
    flat += bin_of_frequency(ki, g.points(i)) * g.stride(i);
    ++i;
  }
  return flat;
}

double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

TEST(GridSpec, RejectsOddOrTinyOrDegenerate) {
  EXPECT_THROW(GridSpec::cube(2, {0.0, 1.0}, 7), ValidationError);
  EXPECT_THROW(GridSpec::cube(2, {0.0, 1.0}, 2), ValidationError);
  EXPECT_THROW(GridSpec::cube(2, {1.0, 1.0}, 8), ValidationError);
  EXPECT_THROW(GridSpec::cube(4, {0.0, 1.0}, 8), ValidationError);
  const GridSpec g({{-30.0, 10.0}, {-21.0, 7.0}}, {8, 16});
  EXPECT_EQ(g.size(), 128u);
  EXPECT_DOUBLE_EQ(g.spacing(0), 5.0);
  EXPECT_DOUBLE_EQ(g.node(1, 3), -21.0 + 3.0 * 28.0 / 16.0);
}

TEST(FrequencyMapping, BinsCoverTn) {
  EXPECT_EQ(frequency_of_bin(0, 8), 0);
  EXPECT_EQ(frequency_of_bin(3, 8), 3);
  EXPECT_EQ(frequency_of_bin(4, 8), -4);
  EXPECT_EQ(frequency_of_bin(7, 8), -1);
  for (long k = -4; k < 4; ++k) EXPECT_EQ(frequency_of_bin(bin_of_frequency(k, 8), 8), k);
  EXPECT_EQ(negated_bin(4, 8), 4u);
  EXPECT_EQ(negated_bin(1, 8), 7u);
}

TEST(BuildSymbols, ExamplesMatchHighPrecisionOracle) {
  const auto g = square(8);
  const auto s2 = build_symbols(g, 2.0);
  EXPECT_EQ(s2.delta()[flat_index(g, {0, 0})], 1.0);
  EXPECT_EQ(s2.frac_lap()[flat_index(g, {0, 0})], 0.0);
  EXPECT_NEAR(s2.delta()[flat_index(g, {1, 0})], 1.41421356237309504880, 1e-15);
  const auto s15 = build_symbols(g, 1.5);
  EXPECT_NEAR(s15.delta()[flat_index(g, {1, 1})], 1.63761803559542818258, 1e-15);
}

TEST(BuildSymbols, RejectsAlphaOutsideRange) {
  EXPECT_THROW(build_symbols(square(8), 1.0), ValidationError);
  EXPECT_THROW(build_symbols(square(8), 2.1), ValidationError);
  EXPECT_NO_THROW(build_symbols(square(8), 2.0));
}

TEST(BuildSymbols, DeltaSymmetricAndAtLeastOne) {
  const GridSpec g({{-1.0, 2.0}, {0.0, 5.0}, {0.0, 1.0}}, {8, 6, 4});
  const auto s = build_symbols(g, 1.3);
  const auto ks = oracle::frequencies(g);
  for (std::size_t a = 0; a < ks.size(); ++a) {
    EXPECT_GE(s.delta()[a], 1.0);
    bool representable = true;
    std::size_t neg = 0;
    for (int i = 0; i < 3; ++i) {
      const long n = static_cast<long>(g.points(i));
      if (ks[a][i] == -n / 2) representable = false;
      else neg += bin_of_frequency(-ks[a][i], g.points(i)) * g.stride(i);
    }
    if (representable) EXPECT_EQ(s.delta()[a], s.delta()[neg]);
    EXPECT_NEAR(s.delta()[a], oracle::delta(g, ks[a], 1.3), 1e-13);
  }
}

TEST(ForwardTransform, ConstantIsDcOnly) {
  const auto g = square(8);
  const Field f = Field::sample(g, [](auto) { return Complex(2.5, -1.0); });
  const Field c = forward_transform(f);
  EXPECT_EQ(c.space(), Space::Spectral);
  EXPECT_NEAR(std::abs(c[0] - Complex(2.5, -1.0)), 0.0, 1e-15);
  for (std::size_t j = 1; j < c.size(); ++j) EXPECT_LT(std::abs(c[j]), 1e-15);
}

TEST(ForwardTransform, SingleModeOrthogonality) {
  const auto g = square(8);
  const Field c = forward_transform(Field::sample(g, [](auto x) { return std::polar(1.0, x[0]); }));
  const auto k10 = flat_index(g, {1, 0});
  for (std::size_t j = 0; j < c.size(); ++j) {
    EXPECT_NEAR(std::abs(c[j] - (j == k10 ? Complex(1.0) : Complex(0.0))), 0.0, 1e-14);
  }
}

TEST(ForwardTransform, CosineSplitsAgainstDirectSum) {
  const auto g = square(8);
  const Field f = Field::sample(g, [](auto x) { return Complex(std::cos(x[0])); });
  const Field c = forward_transform(f);
  const std::vector<Complex> fv(f.values().begin(), f.values().end());
  const auto direct = oracle::direct_forward(g, fv);
  EXPECT_LT(max_diff(c.values(), direct), 1e-14);
  EXPECT_NEAR(c[flat_index(g, {1, 0})].real(), 0.5, 1e-15);
  EXPECT_NEAR(c[flat_index(g, {-1, 0})].real(), 0.5, 1e-15);
}

TEST(ForwardTransform, MatchesDirectSumOnRandom3D) {
  const GridSpec g({{0.0, 1.0}, {-2.0, 3.0}, {0.0, 4.0}}, {4, 6, 4});
  const Field f = oracle::white_random(g, 7);
  const std::vector<Complex> fv(f.values().begin(), f.values().end());
  EXPECT_LT(max_diff(forward_transform(f).values(), oracle::direct_forward(g, fv)), 1e-14);
}

TEST(ForwardTransform, RejectsSpectralInput) {
  const Field c(square(8), Space::Spectral);
  EXPECT_THROW(forward_transform(c), ValidationError);
  const Field p(square(8), Space::Physical);
  EXPECT_THROW(inverse_transform(p), ValidationError);
}

TEST(InverseTransform, Examples) {
  const auto g = square(8);
  Field zero(g, Space::Spectral);
  EXPECT_EQ(inverse_transform(zero).max_abs(), 0.0);

  Field dc(g, Space::Spectral);
  dc[0] = 1.0;
  const Field one = inverse_transform(dc);
  for (const auto& z : one.values()) EXPECT_NEAR(std::abs(z - 1.0), 0.0, 1e-15);

  Field cosine(g, Space::Spectral);
  cosine[flat_index(g, {1, 0})] = 0.5;
  cosine[flat_index(g, {-1, 0})] = 0.5;
  const Field f = inverse_transform(cosine);
  const std::vector<Complex> cv(cosine.values().begin(), cosine.values().end());
  EXPECT_LT(max_diff(f.values(), oracle::direct_inverse(g, cv)), 1e-14);
  const auto xs = oracle::nodes(g);
  for (std::size_t p = 0; p < xs.size(); ++p) EXPECT_NEAR(f[p].real(), std::cos(xs[p][0]), 1e-14);
}

TEST(Transforms, RoundTripRelative1e12) {
  for (unsigned seed = 0; seed < 5; ++seed) {
    const GridSpec g({{0.0, 1.0}, {0.0, 2.0 * pi}}, {16, 32});
    const Field f = oracle::white_random(g, seed);
    const Field back = inverse_transform(forward_transform(f));
    EXPECT_LT(max_diff(back.values(), f.values()), 1e-12 * f.max_abs());
    const Field c = forward_transform(f);
    const Field again = forward_transform(inverse_transform(c));
    EXPECT_LT(max_diff(again.values(), c.values()), 1e-12 * c.max_abs());
  }
}

TEST(Transforms, Parseval) {
  for (unsigned seed = 10; seed < 15; ++seed) {
    const GridSpec g({{-3.0, 1.0}, {0.0, 2.0}, {0.0, 7.0}}, {8, 8, 12});
    const Field f = oracle::white_random(g, seed);
    const Field c = forward_transform(f);
    double phys = 0.0, spec = 0.0;
    for (const auto& z : f.values()) phys += std::norm(z);
    for (const auto& z : c.values()) spec += std::norm(z);
    phys *= g.cell_volume();
    spec *= g.volume();
    EXPECT_NEAR(phys / spec, 1.0, 1e-10);
  }
}

TEST(ApplySymbol, IdentityAndInversePair) {
  const auto g = square(16);
  const auto s = build_symbols(g, 1.7);
  const Field c = forward_transform(oracle::white_random(g, 3));
  const std::vector<double> ones(g.size(), 1.0);
  EXPECT_EQ(max_diff(apply_symbol(c, std::span<const double>(ones)).values(), c.values()), 0.0);
  const Field round = apply_symbol(apply_symbol(c, s.inverse_delta()), s.delta());
  EXPECT_LT(max_diff(round.values(), c.values()), 1e-12 * c.max_abs());
}

TEST(ApplySymbol, PhaseOnSingleMode) {
  const auto g = square(8);
  const auto s = build_symbols(g, 2.0);
  Field c(g, Space::Spectral);
  const auto k = flat_index(g, {1, 0});
  c[k] = 1.0;
  const Field out = apply_symbol(c, s, [](double d) { return std::polar(1.0, 0.5 * d); });
  EXPECT_NEAR(out[k].real(), 0.760244597075630151253, 1e-15);
  EXPECT_NEAR(out[k].imag(), 0.649636939080062444129, 1e-15);
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (j != k) EXPECT_EQ(out[j], Complex(0.0));
  }
}

TEST(ApplySymbol, PhasePreservesEveryModulus) {
  const auto g = square(32);
  const auto s = build_symbols(g, 1.2);
  const Field c = forward_transform(oracle::white_random(g, 4));
  const auto ph = s.phase(3.7);
  const Field out = apply_symbol(c, std::span<const Complex>(ph));
  for (std::size_t j = 0; j < c.size(); ++j) EXPECT_NEAR(std::abs(out[j]), std::abs(c[j]), 1e-15);
}

TEST(ApplySymbol, RejectsLengthMismatch) {
  const Field c(square(8), Space::Spectral);
  const std::vector<double> m(10, 1.0);
  EXPECT_THROW(apply_symbol(c, std::span<const double>(m)), ValidationError);
}

TEST(Resample, SameGridIsIdentity) {
  const auto g = square(8);
  const Field f = oracle::white_random(g, 1);
  EXPECT_EQ(max_diff(resample(f, g).values(), f.values()), 0.0);
}

TEST(Resample, SingleModeUpsampleKeepsCoefficient) {
  const auto g8 = square(8);
  const auto g16 = square(16);
  Field c(g8, Space::Spectral);
  c[flat_index(g8, {1, 0})] = Complex(0.3, -0.2);
  const Field up = resample(c, g16);
  for (std::size_t j = 0; j < up.size(); ++j) {
    const Complex expect = j == flat_index(g16, {1, 0}) ? Complex(0.3, -0.2) : Complex(0.0);
    EXPECT_EQ(up[j], expect);
  }
}

TEST(Resample, TruncationDropsUnresolvedMode) {
  const auto g16 = square(16);
  const Field f = Field::sample(g16, [](auto x) { return Complex(std::cos(3.0 * x[0])); });
  const Field down = resample(f, square(4));
  EXPECT_EQ(down.space(), Space::Physical);
  EXPECT_LT(down.max_abs(), 1e-15);
}

TEST(Resample, UpThenDownIsIdentity) {
  const GridSpec coarse({{0.0, 1.0}, {0.0, 2.0 * pi}}, {8, 12});
  const GridSpec fine = coarse.with_points({32, 16});
  for (unsigned seed = 0; seed < 3; ++seed) {
    const Field f = oracle::white_random(coarse, seed);
    const Field back = resample(resample(f, fine), coarse);
    EXPECT_LT(max_diff(back.values(), f.values()), 1e-12 * f.max_abs());
  }
}

TEST(Resample, RejectsIntervalMismatch) {
  const Field f(square(8), Space::Physical);
  EXPECT_THROW(resample(f, GridSpec::cube(2, {0.0, 1.0}, 8)), ValidationError);
}

TEST(ConjugateSpectrum, MatchesPhysicalConjugation) {
  const GridSpec g({{0.0, 1.0}, {0.0, 3.0}}, {8, 6});
  const Field f = oracle::white_random(g, 9);
  Field conj_phys = f;
  for (auto& z : conj_phys.values()) z = std::conj(z);
  const Field expect = forward_transform(conj_phys);
  const Field got = conjugate_spectrum(forward_transform(f));
  EXPECT_LT(max_diff(got.values(), expect.values()), 1e-14);
}

}  // namespace
}  // namespace fsg
