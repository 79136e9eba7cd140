#include "spinsq/fieldio.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

static_assert(std::endian::native == std::endian::little, "archive payload is little-endian");

namespace spinsq {

std::string to_string(FieldKind k) {
    switch (k) {
        case FieldKind::SpinorP: return "spinor+";
        case FieldKind::SpinorM: return "spinor-";
        case FieldKind::OneForm: return "oneform";
        case FieldKind::TwoForm: return "twoform";
        case FieldKind::SDForm: return "sdform";
        case FieldKind::ThreeForm: return "threeform";
        case FieldKind::Links: return "links";
        case FieldKind::Gauge: return "gauge";
        case FieldKind::SphereMap: return "spheremap";
    }
    return "?";
}

namespace {

struct KindSpec {
    FieldKind kind;
    const char* name;
    const char* dtype;
    int components;
    size_t elem_size;
};

constexpr KindSpec kKinds[] = {
    {FieldKind::SpinorP, "spinor+", "complex128", 2, 16}, {FieldKind::SpinorM, "spinor-", "complex128", 2, 16},
    {FieldKind::OneForm, "oneform", "float64", 4, 8},     {FieldKind::TwoForm, "twoform", "float64", 6, 8},
    {FieldKind::SDForm, "sdform", "float64", 3, 8},       {FieldKind::ThreeForm, "threeform", "float64", 4, 8},
    {FieldKind::Links, "links", "complex128", 4, 16},     {FieldKind::Gauge, "gauge", "complex128", 1, 16},
    {FieldKind::SphereMap, "spheremap", "float64", 3, 8},
};

const KindSpec& spec_for(FieldKind k) {
    for (const auto& s : kKinds)
        if (s.kind == k) return s;
    throw CorruptHeader("unknown field kind");
}

const KindSpec& spec_for(const std::string& name) {
    for (const auto& s : kKinds)
        if (name == s.name) return s;
    throw CorruptHeader("unknown field kind '" + name + "'");
}

void write_archive(const std::string& path, FieldKind kind, const LatticeGrid& g, const void* payload,
                   size_t bytes) {
    const KindSpec& ks = spec_for(kind);
    std::ostringstream head;
    head << "spinsq-field 1\n";
    head << "kind " << ks.name << "\n";
    head << "dims " << g.n[0] << " " << g.n[1] << " " << g.n[2] << " " << g.n[3] << "\n";
    head.precision(17);
    head << "periods " << g.period[0] << " " << g.period[1] << " " << g.period[2] << " "
         << g.period[3] << "\n";
    head << "dtype " << ks.dtype << "\n";
    head << "components " << ks.components << "\n";
    head << "order lex3 components-innermost little-endian\n";
    head << "payload " << bytes << "\n";
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    const std::string h = head.str();
    out.write(h.data(), std::streamsize(h.size()));
    out.write(static_cast<const char*>(payload), std::streamsize(bytes));
    if (!out) throw Error("short write to '" + path + "'");
}

struct RawArchive {
    ArchiveInfo info;
    std::vector<char> payload;
};

std::string expect_line(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line)) throw CorruptHeader(std::string("truncated header: missing ") + what);
    return line;
}

ArchiveInfo parse_header(std::istream& in, size_t& payload_bytes) {
    ArchiveInfo info;
    {
        std::istringstream l(expect_line(in, "magic"));
        std::string magic;
        int version = 0;
        l >> magic >> version;
        if (magic != "spinsq-field" || l.fail()) throw CorruptHeader("bad magic line");
        if (version != 1) throw UnsupportedVersion("archive version " + std::to_string(version));
        info.version = version;
    }
    std::string kind_name;
    std::array<int, 4> dims{};
    std::array<double, 4> periods{};
    std::string dtype;
    int components = 0;
    payload_bytes = 0;
    bool have_payload = false;
    std::string line;
    while (!have_payload && std::getline(in, line)) {
        std::istringstream l(line);
        std::string key;
        l >> key;
        if (key == "kind") {
            l >> kind_name;
        } else if (key == "dims") {
            l >> dims[0] >> dims[1] >> dims[2] >> dims[3];
        } else if (key == "periods") {
            l >> periods[0] >> periods[1] >> periods[2] >> periods[3];
        } else if (key == "dtype") {
            l >> dtype;
        } else if (key == "components") {
            l >> components;
        } else if (key == "order") {
            std::string a, b, c;
            l >> a >> b >> c;
            if (a != "lex3" || b != "components-innermost" || c != "little-endian")
                throw CorruptHeader("unsupported ordering '" + line + "'");
        } else if (key == "payload") {
            long long n = -1;
            l >> n;
            if (n < 0 || l.fail()) throw CorruptHeader("bad payload line");
            payload_bytes = size_t(n);
            have_payload = true;
        } else {
            throw CorruptHeader("unknown header key '" + key + "'");
        }
        if (l.fail()) throw CorruptHeader("malformed header line '" + line + "'");
    }
    if (!have_payload) throw CorruptHeader("truncated header: missing payload line");
    if (kind_name.empty()) throw CorruptHeader("missing kind");
    const KindSpec& ks = spec_for(kind_name);
    info.kind = ks.kind;
    if (dtype != ks.dtype) throw CorruptHeader("dtype '" + dtype + "' does not match kind");
    if (components != ks.components) throw CorruptHeader("component count does not match kind");
    info.dtype = dtype;
    info.components = components;
    try {
        info.grid = LatticeGrid(dims, periods);
    } catch (const ShapeMismatch& e) {
        throw CorruptHeader(std::string("bad grid: ") + e.what());
    }
    const size_t expected = size_t(info.grid.volume()) * size_t(components) * ks.elem_size;
    if (payload_bytes != expected)
        throw LengthMismatch("payload length " + std::to_string(payload_bytes) + " != expected " +
                             std::to_string(expected));
    return info;
}

RawArchive read_archive(const std::string& path, FieldKind expected_kind) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    size_t payload_bytes = 0;
    RawArchive raw;
    raw.info = parse_header(in, payload_bytes);
    if (raw.info.kind != expected_kind)
        throw CorruptHeader("archive holds " + to_string(raw.info.kind) + ", expected " +
                            to_string(expected_kind));
    raw.payload.resize(payload_bytes);
    in.read(raw.payload.data(), std::streamsize(payload_bytes));
    if (size_t(in.gcount()) != payload_bytes) throw LengthMismatch("payload shorter than declared");
    return raw;
}

template <class T>
void save_plain(const std::string& path, FieldKind kind, const Field<T>& f) {
    write_archive(path, kind, f.grid(), f.data(), size_t(f.size()) * sizeof(T));
}

template <class T>
Field<T> load_plain(const std::string& path, FieldKind kind) {
    RawArchive raw = read_archive(path, kind);
    Field<T> f(raw.info.grid);
    std::memcpy(f.data(), raw.payload.data(), raw.payload.size());
    return f;
}

} // namespace

ArchiveInfo archive_info(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    size_t payload_bytes = 0;
    return parse_header(in, payload_bytes);
}

void save(const std::string& path, const SpinorField& f) { save_plain(path, FieldKind::SpinorP, f); }
void save(const std::string& path, const SpinorMinusField& f) { save_plain(path, FieldKind::SpinorM, f); }
void save(const std::string& path, const OneFormField& f) { save_plain(path, FieldKind::OneForm, f); }
void save(const std::string& path, const TwoFormField& f) { save_plain(path, FieldKind::TwoForm, f); }
void save(const std::string& path, const SDFormField& f) { save_plain(path, FieldKind::SDForm, f); }
void save(const std::string& path, const ThreeFormField& f) { save_plain(path, FieldKind::ThreeForm, f); }
void save(const std::string& path, const SphereMapField& f) { save_plain(path, FieldKind::SphereMap, f); }

void save(const std::string& path, const U1Connection& a) {
    // serialize components innermost: u(site, 0..3)
    const LatticeGrid& g = a.grid();
    std::vector<cplx> buf(size_t(4 * g.volume()));
    for (std::int64_t i = 0; i < g.volume(); ++i)
        for (int mu = 0; mu < 4; ++mu) buf[size_t(4 * i + mu)] = a.link(i, mu);
    write_archive(path, FieldKind::Links, g, buf.data(), buf.size() * sizeof(cplx));
}

void save(const std::string& path, const GaugeTransform& s) {
    write_archive(path, FieldKind::Gauge, s.phases.grid(), s.phases.data(),
                  size_t(s.phases.size()) * sizeof(cplx));
}

SpinorField load_spinor_plus(const std::string& path) { return load_plain<SpinorPlus>(path, FieldKind::SpinorP); }
SpinorMinusField load_spinor_minus(const std::string& path) { return load_plain<SpinorMinus>(path, FieldKind::SpinorM); }
OneFormField load_one_form(const std::string& path) { return load_plain<OneForm>(path, FieldKind::OneForm); }
TwoFormField load_two_form(const std::string& path) { return load_plain<TwoForm>(path, FieldKind::TwoForm); }
SDFormField load_sd_form(const std::string& path) { return load_plain<SDForm>(path, FieldKind::SDForm); }
ThreeFormField load_three_form(const std::string& path) { return load_plain<ThreeForm>(path, FieldKind::ThreeForm); }
SphereMapField load_sphere_map(const std::string& path) {
    return load_plain<std::array<double, 3>>(path, FieldKind::SphereMap);
}

U1Connection load_links(const std::string& path) {
    RawArchive raw = read_archive(path, FieldKind::Links);
    U1Connection a(raw.info.grid);
    const cplx* buf = reinterpret_cast<const cplx*>(raw.payload.data());
    for (std::int64_t i = 0; i < raw.info.grid.volume(); ++i)
        for (int mu = 0; mu < 4; ++mu) a.link(i, mu) = buf[4 * i + mu];
    return a;
}

GaugeTransform load_gauge(const std::string& path) {
    RawArchive raw = read_archive(path, FieldKind::Gauge);
    GaugeTransform s(raw.info.grid);
    std::memcpy(s.phases.data(), raw.payload.data(), raw.payload.size());
    return s;
}

} // namespace spinsq
