#include "bct/cache.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "bct/error.hpp"

namespace bct {

namespace {

constexpr char kMagic[4] = {'B', 'C', 'T', 'C'};

class Writer {
 public:
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  void bytes(const char* p, std::size_t n) { buf.insert(buf.end(), p, p + n); }
  void str(const std::string& s) {
    u64(s.size());
    bytes(s.data(), s.size());
  }
  void hyps(const Collection& b) {
    u64(b.size());
    for (HypId h : b) u64(static_cast<std::uint64_t>(h));
  }
  std::vector<char> buf;
};

class Reader {
 public:
  explicit Reader(const std::vector<char>& b) : buf_(b) {}
  bool ok() const { return ok_; }
  std::uint64_t u64() {
    if (pos_ + 8 > buf_.size()) return fail();
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf_[pos_ + i])) << (8 * i);
    pos_ += 8;
    return v;
  }
  bool bytes(char* out, std::size_t n) {
    if (pos_ + n > buf_.size()) return fail() != 0;
    std::memcpy(out, buf_.data() + pos_, n);
    pos_ += n;
    return true;
  }
  std::string str() {
    const std::uint64_t n = u64();
    if (!ok_ || n > buf_.size() - pos_) return fail(), std::string();
    std::string s(buf_.data() + pos_, n);
    pos_ += n;
    return s;
  }
  Collection hyps(std::size_t limit) {
    const std::uint64_t n = u64();
    Collection b;
    if (!ok_ || n > limit) return fail(), b;
    for (std::uint64_t i = 0; i < n && ok_; ++i) {
      const std::uint64_t h = u64();
      if (h >= limit) fail();
      b.push_back(static_cast<HypId>(h));
    }
    return b;
  }
  bool at_end() const { return pos_ == buf_.size(); }

 private:
  std::uint64_t fail() {
    ok_ = false;
    return 0;
  }
  const std::vector<char>& buf_;
  std::size_t pos_ = 0;
  bool ok_ = true;
};

constexpr std::size_t kDigestSize = 32;

std::string sha256(const char* data, std::size_t n) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data, n, md, &len, EVP_sha256(), nullptr) != 1 || len != kDigestSize)
    throw Error(ErrorCode::InternalInconsistency, "SHA-256 failed");
  return std::string(reinterpret_cast<const char*>(md), len);
}

}  // namespace

std::string definition_hash(const GroupDefinition& def) {
  const std::string text = canonical_definition_text(def);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned char c : sha256(text.data(), text.size())) {
    out.push_back(hex[c >> 4]);
    out.push_back(hex[c & 15]);
  }
  return out;
}

std::string GroupCache::path_for(const std::string& hash) const {
  return (std::filesystem::path(dir_) / (hash + ".bin")).string();
}

std::optional<CachedData> GroupCache::load(const std::string& hash, std::size_t group_order,
                                           std::size_t hyperplanes) const {
  std::ifstream in(path_for(hash), std::ios::binary);
  if (!in) return std::nullopt;
  std::vector<char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  // The payload is followed by its SHA-256.
  if (buf.size() < kDigestSize) return std::nullopt;
  const std::size_t payload = buf.size() - kDigestSize;
  if (sha256(buf.data(), payload) != std::string(buf.data() + payload, kDigestSize)) return std::nullopt;
  buf.resize(payload);
  Reader r(buf);
  char magic[4];
  if (!r.bytes(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) return std::nullopt;
  if (r.u64() != kCacheVersion || r.str() != hash) return std::nullopt;
  if (r.u64() != group_order || r.u64() != hyperplanes || !r.ok()) return std::nullopt;
  CachedData d;
  d.transverse_flags.resize(hyperplanes * hyperplanes);
  if (!r.bytes(d.transverse_flags.data(), d.transverse_flags.size())) return std::nullopt;
  const std::uint64_t count = r.u64();
  if (!r.ok() || count > buf.size()) return std::nullopt;
  for (std::uint64_t i = 0; i < count && r.ok(); ++i) {
    OrbitRecord o;
    o.representative = r.hyps(hyperplanes);
    o.orbit_size = r.u64();
    o.stab_order = r.u64();
    o.cardinality = r.u64();
    const std::uint64_t members = r.u64();
    if (!r.ok() || members > buf.size()) return std::nullopt;
    for (std::uint64_t k = 0; k < members && r.ok(); ++k) o.members.push_back(r.hyps(hyperplanes));
    d.orbits.push_back(std::move(o));
  }
  if (!r.ok() || !r.at_end()) return std::nullopt;
  return d;
}

std::vector<char> GroupCache::serialize(const std::string& hash, std::size_t group_order, const CachedData& data,
                                        std::uint32_t version) {
  Writer w;
  w.bytes(kMagic, 4);
  w.u64(version);
  w.str(hash);
  w.u64(group_order);
  std::size_t n = 0;
  while (n * n < data.transverse_flags.size()) ++n;
  w.u64(n);
  w.bytes(data.transverse_flags.data(), data.transverse_flags.size());
  w.u64(data.orbits.size());
  for (const auto& o : data.orbits) {
    w.hyps(o.representative);
    w.u64(o.orbit_size);
    w.u64(o.stab_order);
    w.u64(o.cardinality);
    w.u64(o.members.size());
    for (const auto& b : o.members) w.hyps(b);
  }
  const std::string digest = sha256(w.buf.data(), w.buf.size());
  w.bytes(digest.data(), digest.size());
  return std::move(w.buf);
}

void GroupCache::store(const std::string& hash, std::size_t group_order, const CachedData& data) const {
  const std::vector<char> buf = serialize(hash, group_order, data);
  namespace fs = std::filesystem;
  fs::create_directories(dir_);
  const std::string final_path = path_for(hash);
  const std::string tmp = final_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidParameters, "cannot write cache file " + tmp);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  }
  fs::rename(tmp, final_path);
}

}  // namespace bct
