#include "lfic/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>

#include "lfic/error.hpp"

namespace lfic::kernels {

const Table& scalar_table();
#if defined(__x86_64__) || defined(__i386__)
const Table& avx2_table();
#endif

bool available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

const Table& table(Isa isa) {
  if (!available(isa)) fail(Errc::invalid_argument, "kernel ISA not available on this CPU");
  switch (isa) {
    case Isa::scalar:
      return scalar_table();
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return avx2_table();
#else
      break;
#endif
  }
  return scalar_table();
}

Isa detect() { return available(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

std::optional<Isa> parse_isa(std::string_view s) {
  if (s == "scalar") return Isa::scalar;
  if (s == "avx2") return Isa::avx2;
  if (s == "auto") return detect();
  return std::nullopt;
}

namespace {

std::atomic<const Table*> g_active{nullptr};

const Table* initial_table() {
  if (const char* env = std::getenv("LFIC_KERNELS")) {
    if (auto isa = parse_isa(env); isa && available(*isa)) return &table(*isa);
  }
  return &table(detect());
}

} // namespace

const Table& active() {
  const Table* t = g_active.load(std::memory_order_acquire);
  if (!t) {
    static std::once_flag once;
    std::call_once(once, [] {
      g_active.store(initial_table(), std::memory_order_release);
    });
    t = g_active.load(std::memory_order_acquire);
  }
  return *t;
}

void select(Isa isa) { g_active.store(&table(isa), std::memory_order_release); }

} // namespace lfic::kernels
