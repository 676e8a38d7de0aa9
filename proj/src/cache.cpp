#include "genset/cache.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace genset {

namespace {

constexpr char kMagic[8] = {'G', 'E', 'N', 'S', 'E', 'T', 'C', '1'};

enum Section : std::uint32_t {
  kElements = 1,
  kSubgroups = 2,
  kClasses = 3,
  kAction = 4,
};

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u16(std::uint16_t v) { put(v, 2); }
  void u32(std::uint32_t v) { put(v, 4); }
  void u64(std::uint64_t v) { put(v, 8); }
  void bytes(std::string_view s) { out_.append(s); }
  std::string& str() { return out_; }

  // Length-prefixed section; the body is produced by f into a nested writer.
  template <class F>
  void section(Section tag, F&& f) {
    Writer body;
    f(body);
    u32(tag);
    u64(body.out_.size());
    out_.append(body.out_);
  }

 private:
  void put(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}
  std::uint16_t u16() { return static_cast<std::uint16_t>(get(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
  std::uint64_t u64() { return get(8); }
  std::string_view bytes(std::size_t n) {
    need(n);
    auto s = in_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  bool done() const { return pos_ == in_.size(); }
  std::size_t count(std::size_t limit) {
    const std::uint32_t n = u32();
    if (n > limit) throw CacheFormatError("cache: count out of range");
    return n;
  }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) throw CacheFormatError("cache: truncated");
  }
  std::uint64_t get(int n) {
    need(static_cast<std::size_t>(n));
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) v |= std::uint64_t(static_cast<unsigned char>(in_[pos_ + i])) << (8 * i);
    pos_ += static_cast<std::size_t>(n);
    return v;
  }
  std::string_view in_;
  std::size_t pos_ = 0;
};

void fnv(std::uint64_t& h, std::uint64_t v, int n) {
  for (int i = 0; i < n; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 0x100000001b3ULL;
  }
}

void write_bits(Writer& w, const Bits& b) {
  for (auto word : b.words()) w.u64(word);
}

Bits read_bits(Reader& r, std::size_t size) {
  Bits b(size);
  for (auto& word : b.words()) word = r.u64();
  if (size % 64 && !b.words().empty() && (b.words().back() >> (size % 64)))
    throw CacheFormatError("cache: stray bits");
  return b;
}

}  // namespace

std::uint64_t group_hash(const PermGroup& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  fnv(h, g.degree(), 8);
  auto gens = g.generators();
  std::sort(gens.begin(), gens.end());
  fnv(h, gens.size(), 8);
  for (const auto& p : gens)
    for (Point x : p.images()) fnv(h, x, 4);
  for (char c : g.order().str()) fnv(h, static_cast<unsigned char>(c), 1);
  return h;
}

std::string serialize(const PermGroup& g, const GroupData& data) {
  const std::size_t n = data.order();
  Writer w;
  w.bytes(std::string_view(kMagic, sizeof kMagic));
  w.u32(kCacheFormatVersion);
  w.u64(group_hash(g));
  w.u64(n);
  w.u32(static_cast<std::uint32_t>(g.degree()));

  w.section(kElements, [&](Writer& s) {
    s.u32(static_cast<std::uint32_t>(n));
    for (const auto& p : data.table.index().elements())
      for (Point x : p.images()) s.u32(x);
  });
  w.section(kSubgroups, [&](Writer& s) {
    s.u32(static_cast<std::uint32_t>(data.lattice.subgroups.size()));
    for (const auto& h : data.lattice.subgroups) write_bits(s, h.members);
  });
  w.section(kClasses, [&](Writer& s) {
    s.u32(static_cast<std::uint32_t>(data.lattice.classes.size()));
    for (const auto& cls : data.lattice.classes) {
      s.u32(static_cast<std::uint32_t>(cls.size()));
      for (auto i : cls) s.u32(static_cast<std::uint32_t>(i));
    }
    s.u32(static_cast<std::uint32_t>(data.lattice.maximal_classes.size()));
    for (auto c : data.lattice.maximal_classes) s.u32(static_cast<std::uint32_t>(c));
  });
  w.section(kAction, [&](Writer& s) {
    const auto& a = data.action;
    s.u32(static_cast<std::uint32_t>(a.blocks.size()));
    for (const auto& b : a.blocks) {
      s.u32(static_cast<std::uint32_t>(b.offset));
      write_bits(s, b.subgroup.members);
      s.u32(static_cast<std::uint32_t>(b.transversal.size()));
      for (ElementId e : b.transversal) s.u16(e);
    }
    s.u32(static_cast<std::uint32_t>(a.total_degree));
    for (auto word : a.fix.data()) s.u64(word);
  });
  return std::move(w.str());
}

GroupData deserialize(const PermGroup& g, std::string_view bytes) {
  Reader r(bytes);
  if (r.bytes(sizeof kMagic) != std::string_view(kMagic, sizeof kMagic)) throw CacheFormatError("cache: bad magic");
  if (r.u32() != kCacheFormatVersion) throw CacheFormatError("cache: format version mismatch");
  if (r.u64() != group_hash(g)) throw CacheFormatError("cache: entry belongs to another group");
  const std::size_t n = r.u64();
  if (n == 0 || n > kMaxElementCap || BigInt(n) != g.order()) throw CacheFormatError("cache: order mismatch");
  if (r.u32() != g.degree()) throw CacheFormatError("cache: degree mismatch");

  std::optional<GroupTable> table;
  Lattice lattice;
  MUniversalAction action;
  bool seen[5] = {};
  while (!r.done()) {
    const std::uint32_t tag = r.u32();
    const std::uint64_t len = r.u64();
    Reader s(r.bytes(len));
    if (tag < kElements || tag > kAction || seen[tag]) throw CacheFormatError("cache: unexpected section");
    seen[tag] = true;
    switch (tag) {
      case kElements: {
        if (s.count(n) != n) throw CacheFormatError("cache: element count");
        std::vector<Permutation> elems;
        elems.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<Point> img(g.degree());
          for (auto& x : img) x = s.u32();
          try {
            elems.emplace_back(std::move(img));
          } catch (const Error&) {
            throw CacheFormatError("cache: element is not a permutation");
          }
        }
        for (const auto& p : elems)
          if (!g.contains(p)) throw CacheFormatError("cache: element outside the group");
        table.emplace(g, ElementIndex(std::move(elems)));
        break;
      }
      case kSubgroups: {
        const std::size_t count = s.count(SIZE_MAX >> 1);
        for (std::size_t i = 0; i < count; ++i) lattice.subgroups.emplace_back(read_bits(s, n));
        break;
      }
      case kClasses: {
        const std::size_t count = s.count(lattice.subgroups.size());
        lattice.class_of.assign(lattice.subgroups.size(), SIZE_MAX);
        for (std::size_t c = 0; c < count; ++c) {
          auto& cls = lattice.classes.emplace_back(s.count(lattice.subgroups.size()));
          for (auto& i : cls) {
            i = s.u32();
            if (i >= lattice.subgroups.size() || lattice.class_of[i] != SIZE_MAX)
              throw CacheFormatError("cache: bad class member");
            lattice.class_of[i] = c;
          }
        }
        if (std::find(lattice.class_of.begin(), lattice.class_of.end(), SIZE_MAX) != lattice.class_of.end())
          throw CacheFormatError("cache: unclassified subgroup");
        lattice.maximal_classes.resize(s.count(count));
        for (auto& c : lattice.maximal_classes) {
          c = s.u32();
          if (c >= count) throw CacheFormatError("cache: bad maximal class");
        }
        break;
      }
      case kAction: {
        action.blocks.resize(s.count(n));
        for (auto& b : action.blocks) {
          b.offset = s.u32();
          b.subgroup = SubgroupSet(read_bits(s, n));
          b.transversal.resize(s.count(n));
          for (auto& e : b.transversal) {
            e = s.u16();
            if (e >= n) throw CacheFormatError("cache: bad transversal");
          }
        }
        action.total_degree = s.u32();
        action.fix = BitMatrix(n, action.total_degree);
        for (auto& word : action.fix.data()) word = s.u64();
        break;
      }
    }
    if (!s.done()) throw CacheFormatError("cache: trailing section bytes");
  }
  if (!(seen[kElements] && seen[kSubgroups] && seen[kClasses] && seen[kAction]))
    throw CacheFormatError("cache: missing section");

  MaximalClasses maximal = maximal_subgroups(lattice, n);
  SubgroupSet frat = frattini(maximal, n);
  if (action.total_degree && !(action.fix.row_bits(0) == Bits(action.total_degree, true)))
    throw CacheFormatError("cache: identity must fix every point");
  return GroupData{std::move(*table), std::move(lattice), std::move(maximal), std::move(action), std::move(frat)};
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const PermGroup& g) {
  std::ostringstream name;
  name << std::hex << group_hash(g) << ".gsc";
  return dir / name.str();
}

std::optional<GroupData> load_cached(const std::filesystem::path& dir, const PermGroup& g) {
  std::ifstream in(cache_file(dir, g), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return deserialize(g, buf.str());
  } catch (const CacheFormatError&) {
    return std::nullopt;
  }
}

void store_cached(const std::filesystem::path& dir, const PermGroup& g, const GroupData& data) {
  std::filesystem::create_directories(dir);
  const auto target = cache_file(dir, g);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    const std::string bytes = serialize(g, data);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("cache: cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

GroupData analyze_cached(const PermGroup& g, const AnalysisOptions& options,
                         const std::optional<std::filesystem::path>& dir, CacheOutcome* outcome) {
  CacheOutcome local;
  local.used = dir.has_value();
  if (dir) {
    if (g.order() > options.cap) throw OrderExceedsCap(g.order().str(), options.cap);
    if (auto cached = load_cached(*dir, g)) {
      local.hit = true;
      if (outcome) *outcome = local;
      return std::move(*cached);
    }
  }
  GroupData data = analyze(g, options);
  if (dir) store_cached(*dir, g, data);
  if (outcome) *outcome = local;
  return data;
}

}  // namespace genset
