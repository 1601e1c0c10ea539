#include <algorithm>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "zsum/io.hpp"

namespace zsum {

namespace {

// Wrap records at a conventional width, breaking long digit runs with a
// trailing backslash.
void write_wrapped(std::ostream& os, const std::string& line, size_t width = 78) {
  size_t pos = 0;
  while (line.size() - pos > width) {
    size_t cut = pos + width;
    os.write(line.data() + pos, std::streamsize(cut - pos));
    os << "\\\n";
    pos = cut;
  }
  os.write(line.data() + pos, std::streamsize(line.size() - pos));
  os << "\n";
}

std::string z_word_name(const SumWord& z) {
  std::string s = "Z(";
  for (int i = 0; i < z.len; i++) {
    if (i) s += ",";
    s += std::to_string(int(z.c[i]));
  }
  return s + ")";
}

std::string h_index_list(const IntegralWord& h) {
  std::string s;
  for (int i = 0; i < h.len; i++) {
    if (i) s += ",";
    s += std::to_string(int(h.a[i]));
  }
  return s;
}

template <class F>
Expr<F> parse_expr_t(const std::string& s);
template <>
Expr<Rat> parse_expr_t<Rat>(const std::string& s) {
  return parse_expression(s);
}
template <>
Expr<Fp> parse_expr_t<Fp>(const std::string& s) {
  return parse_expression_fp(s);
}

}  // namespace

template <class F>
void write_table(std::ostream& os, const ReductionTable<F>& t, bool form_style) {
  os << "# zsum reduction table\n";
  os << "# kind " << (t.kind == Kind::mzv ? "mzv" : "euler") << "\n";
  os << "# weight " << t.weight << "\n";
  os << "# depth " << (t.max_depth > 0 ? std::to_string(t.max_depth) : "all") << "\n";
  if (t.prime) os << "#mod " << t.prime << "\n";
  if (t.drop_products) os << "# drop-products\n";
  auto& at = AtomTable::instance();
  os << "# remaining";
  for (AtomId id : t.remaining) os << " " << at.name(id);
  os << "\n";
  os << "# stats eqns " << t.stats.equations_considered << " trivial "
     << t.stats.equations_trivial << " subs " << t.stats.substitutions << " groups "
     << t.stats.groups << " max-terms " << t.stats.max_master_terms << " seconds "
     << t.stats.seconds << "\n";
  for (WordKey k : t.order) {
    const Expr<F>* e = t.find(k);
    IntegralWord h = unpack_word(k, t.kind);
    SignedSum z = h_word_value(h);
    std::string rhs;
    Expr<F> val = *e;
    if (z.sign < 0) val.negate();
    if (form_style) {
      write_wrapped(os, "   +E(" + h_index_list(h) + ")*(" + emit_expression(*e) + ")");
    } else {
      write_wrapped(os, z_word_name(z.w) + " = " + emit_expression(val) + " ;");
    }
  }
}

template <class F>
ReductionTable<F> read_table(std::istream& is) {
  ReductionTable<F> t;
  std::string line;
  std::string record;
  auto flush_record = [&]() {
    if (record.empty()) return;
    size_t eq = record.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("table record without '=': " + record);
    SumWord z = parse_z_word(record.substr(0, eq));
    Expr<F> e = parse_expr_t<F>(record.substr(eq + 1));
    int sign = 0;
    IntegralWord h = z_value_to_h_word(z, sign);
    if (sign < 0) e.negate();
    WordKey key = pack_word(h, t.kind);
    t.order.push_back(key);
    t.values.emplace(key.v, std::move(e));
    record.clear();
  };
  bool pending_continuation = false;
  while (std::getline(is, line)) {
    if (!pending_continuation && !line.empty() && line[0] == '#') {
      std::istringstream hs(line);
      std::string hash, kw;
      hs >> hash >> kw;
      if (hash == "#mod") {
        t.prime = uint32_t(std::stoul(kw));
      } else if (kw == "kind") {
        std::string v;
        hs >> v;
        t.kind = v == "mzv" ? Kind::mzv : Kind::euler;
      } else if (kw == "weight") {
        hs >> t.weight;
      } else if (kw == "depth") {
        std::string v;
        hs >> v;
        t.max_depth = v == "all" ? 0 : std::stoi(v);
      } else if (kw == "drop-products") {
        t.drop_products = true;
      } else if (kw == "remaining") {
        std::string name;
        while (hs >> name) t.remaining.push_back(atom_from_symbol(name));
      }
      continue;
    }
    if (line.empty()) continue;
    bool cont = !line.empty() && line.back() == '\\';
    if (cont) line.pop_back();
    record += line;
    pending_continuation = cont;
    if (!cont && record.find(';') != std::string::npos) flush_record();
  }
  flush_record();
  for (AtomId id : t.remaining) {
    const AtomInfo& info = AtomTable::instance().info(id);
    SumWord m = info.idx;
    int d = m.len;
    if (info.tag == AtomTag::zword || info.tag == AtomTag::hword ||
        info.tag == AtomTag::hmixed)
      d = m.len;
    else
      d = 1;
    t.remaining_by_depth[d]++;
  }
  return t;
}

template <class F>
void write_table_file(const std::string& path, const ReductionTable<F>& t,
                      bool form_style) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  write_table(os, t, form_style);
}

template <class F>
ReductionTable<F> read_table_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  return read_table<F>(is);
}

namespace {
constexpr char kMagic[6] = "MZDM1";

void put_u64(std::ostream& os, uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; i++) b[i] = (v >> (8 * i)) & 0xff;
  os.write(reinterpret_cast<char*>(b), 8);
}
uint64_t get_u64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  uint64_t v = 0;
  for (int i = 0; i < 8; i++) v |= uint64_t(b[i]) << (8 * i);
  return v;
}
}  // namespace

void build_sidecar_index(const std::string& table_path) {
  std::ifstream is(table_path);
  if (!is) throw std::runtime_error("cannot read " + table_path);
  Kind kind = Kind::euler;
  std::vector<std::pair<uint64_t, uint64_t>> entries;
  std::string line;
  uint64_t record_start = 0;
  bool in_record = false;
  std::string record;
  while (true) {
    uint64_t off = uint64_t(is.tellg());
    if (!std::getline(is, line)) break;
    if (!in_record && !line.empty() && line[0] == '#') {
      if (line.rfind("# kind", 0) == 0 && line.find("mzv") != std::string::npos)
        kind = Kind::mzv;
      continue;
    }
    if (line.empty()) continue;
    if (!in_record) {
      record_start = off;
      record.clear();
      in_record = true;
    }
    bool cont = !line.empty() && line.back() == '\\';
    record += cont ? line.substr(0, line.size() - 1) : line;
    if (!cont && record.find(';') != std::string::npos) {
      size_t eq = record.find('=');
      SumWord z = parse_z_word(record.substr(0, eq));
      int sign = 0;
      WordKey key = pack_word(z_value_to_h_word(z, sign), kind);
      entries.push_back({key.v, record_start});
      in_record = false;
    }
  }
  std::sort(entries.begin(), entries.end());
  std::ofstream os(table_path + ".idx", std::ios::binary);
  os.write(kMagic, 5);
  put_u64(os, entries.size());
  for (auto& [k, o] : entries) {
    put_u64(os, k);
    put_u64(os, o);
  }
}

std::string lookup_record(const std::string& table_path, const SumWord& z) {
  std::ifstream probe(table_path + ".idx", std::ios::binary);
  if (!probe) {
    build_sidecar_index(table_path);
    probe.open(table_path + ".idx", std::ios::binary);
    if (!probe) throw std::runtime_error("cannot build index for " + table_path);
  }
  char magic[5];
  probe.read(magic, 5);
  if (std::memcmp(magic, kMagic, 5) != 0)
    throw std::runtime_error("bad index magic in " + table_path + ".idx");
  uint64_t n = get_u64(probe);
  std::ifstream table(table_path);
  std::string head;
  Kind kind = Kind::euler;
  while (std::getline(table, head) && !head.empty() && head[0] == '#')
    if (head.rfind("# kind", 0) == 0 && head.find("mzv") != std::string::npos)
      kind = Kind::mzv;

  auto find_key = [&](uint64_t key) -> long long {
    uint64_t lo = 0, hi = n;
    while (lo < hi) {
      uint64_t mid = (lo + hi) / 2;
      probe.seekg(5 + 8 + std::streamoff(mid * 16));
      uint64_t k = get_u64(probe);
      uint64_t off = get_u64(probe);
      if (k == key) return (long long)off;
      if (k < key) lo = mid + 1;
      else hi = mid;
    }
    return -1;
  };
  int sign = 0;
  IntegralWord h = z_value_to_h_word(z, sign);
  long long off = find_key(pack_word(h, kind).v);
  if (off < 0 && kind == Kind::mzv && h.convergent() && h.is_mzv())
    off = find_key(pack_word(mzv_dual(h), kind).v);
  if (off < 0) return "";
  table.clear();
  table.seekg(off);
  std::string record, line;
  while (std::getline(table, line)) {
    bool cont = !line.empty() && line.back() == '\\';
    record += cont ? line.substr(0, line.size() - 1) : line;
    if (!cont && record.find(';') != std::string::npos) break;
  }
  return record;
}

template void write_table<Rat>(std::ostream&, const ReductionTable<Rat>&, bool);
template void write_table<Fp>(std::ostream&, const ReductionTable<Fp>&, bool);
template ReductionTable<Rat> read_table<Rat>(std::istream&);
template ReductionTable<Fp> read_table<Fp>(std::istream&);
template void write_table_file<Rat>(const std::string&, const ReductionTable<Rat>&, bool);
template void write_table_file<Fp>(const std::string&, const ReductionTable<Fp>&, bool);
template ReductionTable<Rat> read_table_file<Rat>(const std::string&);
template ReductionTable<Fp> read_table_file<Fp>(const std::string&);

}  // namespace zsum
