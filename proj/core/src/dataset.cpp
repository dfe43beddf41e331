#include "mtwu/dataset.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "mtwu/error.hpp"
#include "mtwu/rng.hpp"

namespace mtwu {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end && std::isfinite(out);
}

bool parse_index(std::string_view text, std::uint64_t& out) {
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return !text.empty() && ec == std::errc{} && ptr == end;
}

Instance parse_line(std::string_view line, std::size_t line_no) {
  Instance inst;
  std::vector<SparseEntry> entries;
  std::size_t pos = 0;
  bool have_label = false;
  while (pos < line.size()) {
    const auto start = line.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto stop = line.find_first_of(" \t", start);
    if (stop == std::string_view::npos) stop = line.size();
    const auto token = line.substr(start, stop - start);
    pos = stop;

    if (!have_label) {
      if (!parse_double(token, inst.label)) {
        throw ParseError(line_no, "non-numeric label '" + std::string(token) + "'");
      }
      have_label = true;
      continue;
    }
    const auto colon = token.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line_no, "malformed pair '" + std::string(token) + "'");
    }
    std::uint64_t index = 0;
    if (!parse_index(token.substr(0, colon), index) || index == 0 ||
        index > std::numeric_limits<std::uint32_t>::max()) {
      throw ParseError(line_no, "bad feature index in '" + std::string(token) + "'");
    }
    double value = 0.0;
    if (!parse_double(token.substr(colon + 1), value)) {
      throw ParseError(line_no, "non-numeric value in '" + std::string(token) + "'");
    }
    entries.push_back({static_cast<std::uint32_t>(index - 1), value});
  }
  try {
    inst.x = SparseVector::from_unsorted(std::move(entries));
  } catch (const InvalidArgument& e) {
    throw ParseError(line_no, e.what());
  }
  return inst;
}

std::string read_all(const std::filesystem::path& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw DataError("cannot open " + path.string());
  unsigned char magic[2] = {0, 0};
  probe.read(reinterpret_cast<char*>(magic), 2);
  const bool gzipped = probe.gcount() == 2 && magic[0] == 0x1f && magic[1] == 0x8b;

  if (!gzipped) {
    probe.clear();
    probe.seekg(0);
    std::ostringstream buffer;
    buffer << probe.rdbuf();
    return buffer.str();
  }
  probe.close();

  gzFile gz = gzopen(path.string().c_str(), "rb");
  if (gz == nullptr) throw DataError("cannot open " + path.string());
  std::string text;
  char chunk[1 << 16];
  for (;;) {
    const int got = gzread(gz, chunk, sizeof chunk);
    if (got < 0) {
      gzclose(gz);
      throw DataError("corrupt gzip stream in " + path.string());
    }
    if (got == 0) break;
    text.append(chunk, static_cast<std::size_t>(got));
  }
  gzclose(gz);
  return text;
}

void write_real(std::ostream& out, double v) {
  double integral = 0.0;
  if (std::modf(v, &integral) == 0.0 && std::abs(v) < 1e15) {
    out << static_cast<long long>(v);
  } else {
    out << std::setprecision(17) << v;
  }
}

}  // namespace

Dataset parse_sparse_text(std::string_view text, std::string name) {
  Dataset ds;
  ds.name = std::move(name);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    ++line_no;
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    Instance inst = parse_line(line, line_no);
    ds.d = std::max(ds.d, inst.x.min_dim());
    ds.instances.push_back(std::move(inst));
  }
  return ds;
}

Dataset parse_sparse_text(std::istream& in, std::string name) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_sparse_text(std::string_view(buffer.str()), std::move(name));
}

Dataset read_dataset(const std::filesystem::path& path) {
  auto stem = path.filename();
  if (stem.extension() == ".gz") stem = stem.stem();
  const auto ext = stem.extension();
  if (ext == ".libsvm" || ext == ".svm" || ext == ".txt") stem = stem.stem();
  return parse_sparse_text(std::string_view(read_all(path)), stem.string());
}

void serialize(std::ostream& out, const Dataset& dataset) {
  for (const auto& inst : dataset.instances) {
    write_real(out, inst.label);
    for (const auto& e : inst.x.entries()) {
      out << ' ' << (e.index + 1) << ':';
      write_real(out, e.value);
    }
    out << '\n';
  }
}

std::string serialize(const Dataset& dataset) {
  std::ostringstream out;
  serialize(out, dataset);
  return out.str();
}

Dataset normalize_labels(Dataset dataset) {
  std::vector<double> distinct;
  distinct.reserve(dataset.instances.size());
  for (const auto& inst : dataset.instances) distinct.push_back(inst.label);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 2) throw DataError("dataset needs at least two distinct labels");

  std::map<double, double> mapping;
  if (distinct.size() == 2) {
    mapping[distinct[0]] = -1.0;
    mapping[distinct[1]] = 1.0;
    dataset.label_space = LabelSpace::Binary;
    dataset.num_classes = 2;
  } else {
    for (std::size_t k = 0; k < distinct.size(); ++k) mapping[distinct[k]] = static_cast<double>(k);
    dataset.label_space = LabelSpace::Multiclass;
    dataset.num_classes = distinct.size();
  }
  for (auto& inst : dataset.instances) inst.label = mapping.at(inst.label);
  return dataset;
}

std::vector<std::size_t> permute(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Xoshiro256ss rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

Dataset subsample(const Dataset& dataset, std::size_t k, std::uint64_t seed) {
  const std::size_t n = dataset.size();
  if (dataset.label_space == LabelSpace::Raw) {
    throw InvalidArgument("subsample needs normalized labels");
  }
  if (k == 0 || k > n) throw InvalidArgument("subsample size must be in [1, n]");
  const std::size_t K = dataset.num_classes;
  if (k < K) throw InvalidArgument("subsample smaller than the number of classes");

  const auto order = permute(n, seed);
  auto class_of = [&](std::size_t i) {
    const double label = dataset.instances[i].label;
    return dataset.label_space == LabelSpace::Binary ? (label > 0 ? std::size_t{1} : std::size_t{0})
                                                     : static_cast<std::size_t>(label);
  };

  std::vector<std::size_t> picked(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<std::size_t> seen(K, 0);
  for (auto i : picked) ++seen[class_of(i)];

  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    // Proportional quotas (at least one per class, largest remainder for the rest),
    // filled in permutation order.
    std::vector<std::size_t> total(K, 0);
    for (std::size_t i = 0; i < n; ++i) ++total[class_of(i)];
    std::vector<std::size_t> quota(K);
    std::vector<std::pair<double, std::size_t>> remainders;
    std::size_t assigned = 0;
    for (std::size_t c = 0; c < K; ++c) {
      const double exact = static_cast<double>(k) * static_cast<double>(total[c]) / static_cast<double>(n);
      quota[c] = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(exact)));
      remainders.emplace_back(exact - std::floor(exact), c);
      assigned += quota[c];
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t i = 0; assigned < k; i = (i + 1) % K) {
      const auto c = remainders[i].second;
      if (quota[c] < total[c]) {
        ++quota[c];
        ++assigned;
      }
    }
    while (assigned > k) {
      const auto c = static_cast<std::size_t>(
          std::max_element(quota.begin(), quota.end()) - quota.begin());
      --quota[c];
      --assigned;
    }
    picked.clear();
    std::vector<std::size_t> taken(K, 0);
    for (auto i : order) {
      const auto c = class_of(i);
      if (taken[c] < quota[c]) {
        ++taken[c];
        picked.push_back(i);
      }
    }
  }

  Dataset out;
  out.name = dataset.name;
  out.label_space = dataset.label_space;
  out.num_classes = dataset.num_classes;
  out.d = dataset.d;
  out.instances.reserve(picked.size());
  for (auto i : picked) out.instances.push_back(dataset.instances[i]);
  return out;
}

std::uint64_t permutation_fingerprint(const std::vector<std::size_t>& order) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto idx : order) {
    auto v = static_cast<std::uint64_t>(idx);
    for (int b = 0; b < 8; ++b) {
      h ^= (v & 0xff);
      h *= 0x100000001b3ULL;
      v >>= 8;
    }
  }
  return h;
}

}  // namespace mtwu
