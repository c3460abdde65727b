#include "bridged/labels.hpp"

#include <array>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>

#include "bridged/graph_io.hpp"

namespace bridged {

namespace {

void put(std::vector<std::uint8_t>& out, std::uint64_t x) {
    while (x >= 0x80) {
        out.push_back(static_cast<std::uint8_t>(x | 0x80));
        x >>= 7;
    }
    out.push_back(static_cast<std::uint8_t>(x));
}

void put_side(std::vector<std::uint8_t>& out, const std::optional<SideRecord>& side) {
    if (!side) throw std::invalid_argument("serialize: star level without side record");
    put(out, side->tree.size());
    for (const auto& e : side->tree) {
        put(out, e.separator);
        put(out, static_cast<std::uint64_t>(e.dist));
    }
    put(out, static_cast<std::uint64_t>(side->dist));
}

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint64_t get(std::uint64_t limit = std::numeric_limits<std::uint32_t>::max()) {
        const std::size_t start = pos_;
        std::uint64_t x = 0;
        for (int shift = 0;; shift += 7) {
            if (pos_ >= bytes_.size()) throw ParseError("truncated label", pos_);
            if (shift > 35) throw ParseError("integer too long", start);
            const std::uint8_t b = bytes_[pos_++];
            x |= static_cast<std::uint64_t>(b & 0x7f) << shift;
            if (!(b & 0x80)) break;
        }
        if (x > limit) throw ParseError("integer out of range", start);
        return x;
    }

    bool done() const noexcept { return pos_ == bytes_.size(); }
    std::size_t pos() const noexcept { return pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

constexpr std::uint64_t kMaxInt = std::numeric_limits<std::int32_t>::max();

SideRecord get_side(Reader& r) {
    SideRecord side;
    const auto len = r.get(64);
    side.tree.resize(len);
    for (auto& e : side.tree) {
        e.separator = static_cast<std::uint32_t>(r.get());
        e.dist = static_cast<Distance>(r.get(kMaxInt));
    }
    side.dist = static_cast<Distance>(r.get(kMaxInt));
    return side;
}

constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

}  // namespace

std::vector<std::uint8_t> serialize(const VertexLabel& label) {
    std::vector<std::uint8_t> out;
    put(out, static_cast<std::uint64_t>(label.id));
    put(out, label.levels.size());
    for (const auto& lv : label.levels) {
        put(out, static_cast<std::uint64_t>(lv.median));
        put(out, static_cast<std::uint64_t>(lv.dist));
        put(out, lv.star.size());
        for (std::size_t i = 0; i < lv.star.size(); ++i) put(out, lv.star[i]);
        if (!lv.star.empty()) {
            put_side(out, lv.left);
            put_side(out, lv.right);
        }
    }
    return out;
}

VertexLabel deserialize(std::span<const std::uint8_t> bytes) {
    Reader r(bytes);
    VertexLabel label;
    label.id = static_cast<Vertex>(r.get(kMaxInt));
    const auto levels = r.get(64);
    label.levels.resize(levels);
    for (auto& lv : label.levels) {
        lv.median = static_cast<Vertex>(r.get(kMaxInt));
        lv.dist = static_cast<Distance>(r.get(kMaxInt));
        const std::size_t at = r.pos();
        const auto size = r.get(2);
        if (size == 1) {
            lv.star = StarLabel(static_cast<std::uint32_t>(r.get()));
        } else if (size == 2) {
            const auto a = static_cast<std::uint32_t>(r.get());
            const auto b = static_cast<std::uint32_t>(r.get());
            if (a >= b) throw ParseError("pair star label not strictly ascending", at);
            lv.star = StarLabel(a, b);
        }
        if (size > 0) {
            lv.left = get_side(r);
            lv.right = get_side(r);
        }
    }
    if (!r.done()) throw ParseError("trailing bytes after label", r.pos());
    return label;
}

std::string base64_encode(std::span<const std::uint8_t> bytes) {
    std::string out;
    out.reserve((bytes.size() + 2) / 3 * 4);
    for (std::size_t i = 0; i < bytes.size(); i += 3) {
        std::uint32_t chunk = static_cast<std::uint32_t>(bytes[i]) << 16;
        if (i + 1 < bytes.size()) chunk |= static_cast<std::uint32_t>(bytes[i + 1]) << 8;
        if (i + 2 < bytes.size()) chunk |= bytes[i + 2];
        out += kAlphabet[(chunk >> 18) & 63];
        out += kAlphabet[(chunk >> 12) & 63];
        out += i + 1 < bytes.size() ? kAlphabet[(chunk >> 6) & 63] : '=';
        out += i + 2 < bytes.size() ? kAlphabet[chunk & 63] : '=';
    }
    return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
    std::array<int, 256> value;
    value.fill(-1);
    for (int i = 0; i < 64; ++i) value[static_cast<unsigned char>(kAlphabet[i])] = i;
    if (text.size() % 4 != 0) throw ParseError("base64 length not a multiple of 4", text.size());
    std::vector<std::uint8_t> out;
    for (std::size_t i = 0; i < text.size(); i += 4) {
        std::uint32_t chunk = 0;
        int pad = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            const char c = text[i + j];
            if (c == '=' && i + 4 == text.size() && j >= 2) {
                ++pad;
                chunk <<= 6;
                continue;
            }
            const int v = value[static_cast<unsigned char>(c)];
            if (v < 0 || pad > 0) throw ParseError("bad base64 character", i + j);
            chunk = (chunk << 6) | static_cast<std::uint32_t>(v);
        }
        out.push_back(static_cast<std::uint8_t>(chunk >> 16));
        if (pad < 2) out.push_back(static_cast<std::uint8_t>(chunk >> 8));
        if (pad < 1) out.push_back(static_cast<std::uint8_t>(chunk));
    }
    return out;
}

void write_labels(std::ostream& out, const LabelSet& set) {
    out << "#bridged-labels v1 n=" << set.size() << " hash=" << hash_hex(set.instance_hash) << '\n';
    for (std::size_t v = 0; v < set.size(); ++v) out << v << '\t' << base64_encode(set.labels[v]) << '\n';
}

LabelSet read_labels(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty label file", 1);
    std::size_t n = 0;
    std::string hex;
    {
        const std::string prefix = "#bridged-labels v1 n=";
        const auto hash_at = line.find(" hash=");
        if (line.rfind(prefix, 0) != 0 || hash_at == std::string::npos) throw ParseError("bad label file header", 1);
        try {
            std::size_t used = 0;
            const std::string count = line.substr(prefix.size(), hash_at - prefix.size());
            n = std::stoull(count, &used);
            if (used != count.size()) throw std::invalid_argument("count");
        } catch (const std::exception&) {
            throw ParseError("bad vertex count in header", 1);
        }
        hex = line.substr(hash_at + 6);
    }
    LabelSet set;
    if (hex.size() != 16 || hex.find_first_not_of("0123456789abcdef") != std::string::npos) {
        throw ParseError("bad instance hash in header", 1);
    }
    set.instance_hash = std::stoull(hex, nullptr, 16);
    set.labels.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t lineno = v + 2;
        if (!std::getline(in, line)) throw ParseError("missing label line", lineno);
        const auto tab = line.find('\t');
        if (tab == std::string::npos || line.substr(0, tab) != std::to_string(v)) {
            throw ParseError("expected label for vertex " + std::to_string(v), lineno);
        }
        try {
            set.labels[v] = base64_decode(line.substr(tab + 1));
            if (set.label(static_cast<Vertex>(v)).id != static_cast<Vertex>(v)) throw ParseError("label id mismatch", 0);
        } catch (const ParseError& e) {
            throw ParseError(std::string("corrupt label: ") + e.what(), lineno);
        }
    }
    while (std::getline(in, line)) {
        if (!line.empty()) throw ParseError("trailing data after labels", n + 2);
    }
    return set;
}

void write_label_file(const std::string& path, const LabelSet& set) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_labels(out, set);
    if (!out) throw std::runtime_error("write failed: " + path);
}

LabelSet read_label_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return read_labels(in);
}

}  // namespace bridged
