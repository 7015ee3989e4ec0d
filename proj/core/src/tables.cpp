#include "partcat/tables.hpp"

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace partcat::tables {

namespace {

std::shared_mutex& mtx() {
  static std::shared_mutex m;
  return m;
}

std::array<std::unique_ptr<OneLine>, kEnumerationCap + 1>& slots() {
  static std::array<std::unique_ptr<OneLine>, kEnumerationCap + 1> s;
  return s;
}

std::unique_ptr<OneLine> build(std::size_t l) {
  auto t = std::make_unique<OneLine>();
  t->length = l;
  const std::uint64_t n = bell(l);
  if (l >= 1) {
    t->rotate.resize(n);
    t->rotateInv.resize(n);
  }
  t->reflect.resize(n);
  if (l >= 2) {
    t->contract.resize(n);
    t->contractLoop.resize(n);
  }
  for (std::uint64_t r = 0; r < n; ++r) {
    Partition p = unrank(l, r);
    if (l >= 1) {
      t->rotate[r] = rank(ops::rotate(p, 1));
      t->rotateInv[r] = rank(ops::rotate(p, -1));
    }
    t->reflect[r] = rank(ops::reflect(p));
    if (l >= 2) {
      auto [q, loop] = ops::contract(p);
      t->contract[r] = rank(q);
      t->contractLoop[r] = loop ? 1 : 0;
    }
  }
  return t;
}

std::filesystem::path cache_file(std::size_t l) {
  const char* dir = std::getenv("PARTCAT_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir) / ("oneline-" + std::to_string(l) + ".bin");
}

template <class T>
void write_vec(std::ofstream& os, const std::vector<T>& v) {
  std::uint64_t n = v.size();
  os.write(reinterpret_cast<const char*>(&n), sizeof n);
  os.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(n * sizeof(T)));
}

template <class T>
bool read_vec(std::ifstream& is, std::vector<T>& v, std::uint64_t expect) {
  std::uint64_t n = 0;
  if (!is.read(reinterpret_cast<char*>(&n), sizeof n)) return false;
  if (n != expect) return false;
  v.resize(n);
  return static_cast<bool>(is.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(n * sizeof(T))));
}

std::unique_ptr<OneLine> load(std::size_t l) {
  auto path = cache_file(l);
  if (path.empty()) return nullptr;
  std::ifstream is(path, std::ios::binary);
  if (!is) return nullptr;
  auto t = std::make_unique<OneLine>();
  t->length = l;
  const std::uint64_t n = bell(l);
  bool ok = read_vec(is, t->rotate, l >= 1 ? n : 0) && read_vec(is, t->rotateInv, l >= 1 ? n : 0) &&
            read_vec(is, t->reflect, n) && read_vec(is, t->contract, l >= 2 ? n : 0) &&
            read_vec(is, t->contractLoop, l >= 2 ? n : 0);
  return ok ? std::move(t) : nullptr;
}

void store(const OneLine& t) {
  auto path = cache_file(t.length);
  if (path.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) return;
    write_vec(os, t.rotate);
    write_vec(os, t.rotateInv);
    write_vec(os, t.reflect);
    write_vec(os, t.contract);
    write_vec(os, t.contractLoop);
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

const OneLine& oneLine(std::size_t l) {
  if (l > kEnumerationCap) throw CapacityError("operation tables capped at length 12");
  {
    std::shared_lock lk(mtx());
    if (slots()[l]) return *slots()[l];
  }
  std::unique_lock lk(mtx());
  auto& slot = slots()[l];
  if (!slot) {
    slot = load(l);
    if (!slot) {
      slot = build(l);
      store(*slot);
    }
  }
  return *slot;
}

bool persistOneLine(std::size_t l) {
  if (cache_file(l).empty()) return false;
  oneLine(l);
  return std::filesystem::exists(cache_file(l));
}

std::uint32_t tensorRank(std::size_t la, std::uint32_t a, std::size_t lb, std::uint32_t b) {
  constexpr std::size_t kMemoTotal = 8;
  if (la + lb > kMemoTotal) return rank(ops::tensor(unrank(la, a), unrank(lb, b)));
  static std::shared_mutex m;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<std::uint32_t>> memo;
  const std::pair<std::size_t, std::size_t> key{la, lb};
  {
    std::shared_lock lk(m);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second[a * bell(lb) + b];
  }
  std::vector<std::uint32_t> tab(bell(la) * bell(lb));
  for (std::uint64_t i = 0; i < bell(la); ++i) {
    Partition p = unrank(la, i);
    for (std::uint64_t j = 0; j < bell(lb); ++j) tab[i * bell(lb) + j] = rank(ops::tensor(p, unrank(lb, j)));
  }
  std::unique_lock lk(m);
  auto& slot = memo[key];
  if (slot.empty()) slot = std::move(tab);
  return slot[a * bell(lb) + b];
}

}  // namespace partcat::tables
