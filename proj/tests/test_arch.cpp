#include <doctest.h>

#include "helpers.hpp"

using namespace eocas;
using eocas::test::ref_arch;

TEST_CASE("a fully declared pool validates cleanly") {
  CHECK(validate_arch(ref_arch()).empty());
}

TEST_CASE("validation lists every violation, not just the first") {
  ArchConfig a = ref_arch();
  a.fp_array.rows = 0;
  a.op_energy.mul = -1;
  a.memories[static_cast<int>(MemId::V2)].reset();
  const auto v = validate_arch(a);
  CHECK(v.size() == 3);
  CHECK_THROWS_AS(require_valid_arch(a), ConfigError);
}

TEST_CASE("sram pools need a positive capacity") {
  ArchConfig a = ref_arch();
  a.memories[static_cast<int>(MemId::V5)]->size_bits = 0;
  CHECK(validate_arch(a).size() == 1);
}

TEST_CASE("potential memories default to the conv-result pool coefficients") {
  ArchConfig a = ref_arch();
  a.memories[static_cast<int>(MemId::U_MEM)].reset();
  a.memories[static_cast<int>(MemId::DU_MEM)].reset();
  apply_defaults(a);
  CHECK(a.mem(MemId::U_MEM).read_energy == a.mem(MemId::V3).read_energy);
  CHECK(a.mem(MemId::U_MEM).id == MemId::U_MEM);
  CHECK(a.mem(MemId::DU_MEM).write_energy == a.mem(MemId::V6).write_energy);
}

TEST_CASE("scheme enumeration: all factor pairs, rows ascending") {
  const auto schemes = enumerate_schemes(256);
  REQUIRE(schemes.size() == 9);
  CHECK(schemes.front().rows == 1);
  CHECK(schemes.front().cols == 256);
  CHECK(schemes.back().rows == 256);
  for (const auto& s : schemes) CHECK(s.rows * s.cols == 256);
  for (std::size_t i = 1; i < schemes.size(); ++i)
    CHECK(schemes[i - 1].rows < schemes[i].rows);
  CHECK_THROWS_AS(enumerate_schemes(0), UsageError);
}

TEST_CASE("scaling multiplies every coefficient uniformly") {
  ArchConfig a = ref_arch();
  scale_energies(a, 7.3);
  CHECK(a.op_energy.mux == doctest::Approx(0.05 * 7.3));
  CHECK(a.mem(MemId::DRAM).read_energy == doctest::Approx(2.0 * 7.3));
  CHECK(a.mem(MemId::REG1).write_energy == doctest::Approx(0.02 * 7.3));
}

TEST_CASE("register file selection follows operand width") {
  const ArchConfig a = ref_arch();
  CHECK(a.reg_for_bits(1) == MemId::REG0);
  CHECK(a.reg_for_bits(16) == MemId::REG1);
}
