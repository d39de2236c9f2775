#include "quadgraph/subspace.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace quadgraph {

BigInt gaussian_binomial(int n, int k, long long q) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1, den = 1;
    BigInt Q = q;
    for (int i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(Q, unsigned(n - i)) - 1;
        den *= boost::multiprecision::pow(Q, unsigned(i + 1)) - 1;
    }
    return num / den;  // exact: den divides num
}

Subspace Subspace::zero(FieldRef spec, int n) {
    Subspace s;
    s.spec_ = std::move(spec);
    s.n_ = n;
    s.k_ = 0;
    return s;
}

Subspace Subspace::from_matrix(const Matrix& rows) {
    std::vector<int> pivots;
    int rank = 0;
    Matrix r = rows.rref(&rank, &pivots);
    Subspace s;
    s.spec_ = rows.field();
    s.n_ = rows.cols();
    s.k_ = rank;
    s.pivots_ = std::move(pivots);
    s.rows_.resize(size_t(rank) * rows.cols());
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rows.cols(); ++j) s.rows_[size_t(i) * rows.cols() + j] = r.raw(i, j);
    return s;
}

Matrix Subspace::basis_matrix() const {
    Matrix m(spec_, k_, n_);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < n_; ++j) m.raw(i, j) = raw(i, j);
    return m;
}

bool Subspace::contains_vector(const FVec& v) const {
    if (int(v.size()) != n_) throw DimensionError("vector/ambient dimension mismatch");
    std::vector<std::uint16_t> buf(n_);
    for (int j = 0; j < n_; ++j) {
        if (!spec_->same_field(v[j].spec())) throw FieldError("field mismatch");
        buf[j] = v[j].index();
    }
    return contains_vector_raw(buf.data());
}

bool Subspace::contains_vector_raw(const std::uint16_t* v) const {
    // Reduce against the RREF basis: subtract v[pivot_i] * row_i, then the
    // remainder must vanish.
    const FieldSpec& f = *spec_;
    std::vector<std::uint16_t> w(v, v + n_);
    for (int i = 0; i < k_; ++i) {
        std::uint16_t c = w[pivots_[i]];
        if (c == 0) continue;
        const std::uint16_t* row = rows_.data() + size_t(i) * n_;
        for (int j = 0; j < n_; ++j) w[j] = f.sub(w[j], f.mul(c, row[j]));
    }
    for (int j = 0; j < n_; ++j)
        if (w[j]) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return n_ == o.n_ && k_ == o.k_ && rows_ == o.rows_ && spec_ && o.spec_ &&
           spec_->same_field(*o.spec_);
}

std::string Subspace::to_string() const {
    std::ostringstream os;
    os << "span{";
    for (int i = 0; i < k_; ++i) {
        os << (i ? ", (" : "(");
        for (int j = 0; j < n_; ++j)
            os << (j ? "," : "") << FieldElement(spec_.get(), raw(i, j)).to_string();
        os << ")";
    }
    os << "}";
    return os.str();
}

size_t SubspaceHash::operator()(const Subspace& s) const {
    // FNV-1a over the basis entries plus the shape
    size_t h = 1469598103934665603ull;
    auto mix = [&h](size_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(size_t(s.n_));
    mix(size_t(s.k_));
    for (auto v : s.rows_) mix(size_t(v));
    return h;
}

Subspace canonicalize(const Matrix& m) {
    Subspace s = Subspace::from_matrix(m);
    if (s.dim() == 0) throw Error("canonicalize: zero span");
    return s;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionError("ambient dimension mismatch");
    if (!a.field()->same_field(*b.field())) throw FieldError("field mismatch");
    return Subspace::from_matrix(Matrix::vstack(a.basis_matrix(), b.basis_matrix()));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionError("ambient dimension mismatch");
    if (!a.field()->same_field(*b.field())) throw FieldError("field mismatch");
    // rowspace(A) ∩ rowspace(B) = (A° + B°)° with X° the right kernel of X
    // under the standard dot product.
    Matrix ka = a.basis_matrix().right_kernel();
    Matrix kb = b.basis_matrix().right_kernel();
    return Subspace::from_matrix(Matrix::vstack(ka, kb).right_kernel());
}

bool is_subset(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionError("ambient dimension mismatch");
    if (!a.field()->same_field(*b.field())) throw FieldError("field mismatch");
    for (int i = 0; i < a.dim(); ++i) {
        if (!b.contains_vector_raw(a.raw_basis().data() + size_t(i) * a.ambient())) return false;
    }
    return true;
}

void SubspaceSet::push_back(Subspace s) {
    auto [it, inserted] = index_.try_emplace(s, items_.size());
    if (!inserted) throw Error("duplicate subspace in SubspaceSet");
    items_.push_back(std::move(s));
}

std::optional<size_t> SubspaceSet::index_of(const Subspace& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace {

struct PatternEnumerator {
    int n, k, q;
    std::vector<int> pivots;        // current pivot columns
    std::vector<std::pair<int, int>> free_cells;

    void compute_free_cells() {
        free_cells.clear();
        std::vector<bool> is_pivot(n, false);
        for (int p : pivots) is_pivot[p] = true;
        for (int i = 0; i < k; ++i)
            for (int c = pivots[i] + 1; c < n; ++c)
                if (!is_pivot[c]) free_cells.emplace_back(i, c);
    }
};

void visit_pattern(const PatternEnumerator& pat, const FieldRef& /*spec*/,
                   const std::function<void(const std::uint16_t*)>& visit) {
    const int n = pat.n, k = pat.k, q = pat.q;
    std::vector<std::uint16_t> buf(size_t(k) * n, 0);
    for (int i = 0; i < k; ++i) buf[size_t(i) * n + pat.pivots[i]] = 1;
    const size_t nf = pat.free_cells.size();
    std::vector<int> odo(nf, 0);
    for (;;) {
        visit(buf.data());
        // odometer: last free cell fastest
        size_t pos = nf;
        while (pos > 0) {
            --pos;
            auto [r, c] = pat.free_cells[pos];
            if (++odo[pos] < q) {
                buf[size_t(r) * n + c] = std::uint16_t(odo[pos]);
                break;
            }
            odo[pos] = 0;
            buf[size_t(r) * n + c] = 0;
            if (pos == 0) return;
        }
        if (nf == 0) return;
    }
}

}  // namespace

void enumerate_subspaces_visit(int n, int k, const FieldRef& spec,
                               const std::function<void(const std::uint16_t*)>& visit) {
    if (k < 0 || k > n) throw DimensionError("subspace dimension out of range");
    if (k == 0) {
        visit(nullptr);
        return;
    }
    PatternEnumerator pat;
    pat.n = n;
    pat.k = k;
    pat.q = spec->order();
    pat.pivots.resize(k);
    for (int i = 0; i < k; ++i) pat.pivots[i] = i;
    for (;;) {
        pat.compute_free_cells();
        visit_pattern(pat, spec, visit);
        // next k-combination of {0..n-1} in lexicographic order
        int i = k - 1;
        while (i >= 0 && pat.pivots[i] == n - k + i) --i;
        if (i < 0) break;
        ++pat.pivots[i];
        for (int j = i + 1; j < k; ++j) pat.pivots[j] = pat.pivots[j - 1] + 1;
    }
}

namespace {

using nlohmann::json;

constexpr const char* kCacheFormat = "quadgraph-subspace-cache-v1";

std::filesystem::path cache_path(const std::filesystem::path& dir, int n, int k,
                                 const FieldSpec& f) {
    std::ostringstream name;
    name << "subspaces_q" << f.order() << "_n" << n << "_k" << k;
    if (f.degree() > 1) {
        name << "_m";
        for (size_t i = 0; i < f.modulus().size(); ++i) name << (i ? "-" : "") << f.modulus()[i];
    }
    name << ".json";
    return dir / name.str();
}

std::optional<SubspaceSet> load_cache(const std::filesystem::path& file, int n, int k,
                                      const FieldRef& spec) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    json j;
    try {
        in >> j;
    } catch (const json::exception&) {
        return std::nullopt;
    }
    if (!j.is_object() || j.value("format", "") != kCacheFormat) return std::nullopt;
    if (j.value("n", -1) != n || j.value("k", -1) != k || j.value("q", -1) != spec->order())
        return std::nullopt;
    if (j.value("modulus", std::vector<int>{}) != spec->modulus()) return std::nullopt;
    if (!j.contains("bases") || !j["bases"].is_array()) return std::nullopt;
    const auto& bases = j["bases"];
    if (j.value("count", -1) != int(bases.size())) return std::nullopt;

    SubspaceSet set;
    Matrix m(spec, k, n);
    for (const auto& b : bases) {
        if (!b.is_array() || int(b.size()) != n * k) return std::nullopt;
        for (int i = 0; i < k; ++i)
            for (int c = 0; c < n; ++c) {
                int v = b[size_t(i) * n + c].get<int>();
                if (v < 0 || v >= spec->order()) return std::nullopt;
                m.raw(i, c) = std::uint16_t(v);
            }
        Subspace s = Subspace::from_matrix(m);
        if (s.dim() != k || s.basis_matrix() != m) return std::nullopt;  // not canonical
        try {
            set.push_back(std::move(s));
        } catch (const Error&) {
            return std::nullopt;  // duplicate: corrupt cache
        }
    }
    return set;
}

void save_cache(const std::filesystem::path& file, int n, int k, const FieldRef& spec,
                const SubspaceSet& set) {
    json j;
    j["format"] = kCacheFormat;
    j["n"] = n;
    j["k"] = k;
    j["q"] = spec->order();
    j["modulus"] = spec->modulus();
    j["order"] = "pivot-lex/free-odometer";
    j["count"] = set.size();
    json bases = json::array();
    for (const auto& s : set) {
        json b = json::array();
        for (auto v : s.raw_basis()) b.push_back(int(v));
        bases.push_back(std::move(b));
    }
    j["bases"] = std::move(bases);

    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;  // cache is best effort
        out << j.dump();
    }
    std::filesystem::rename(tmp, file, ec);
}

}  // namespace

SubspaceSet enumerate_subspaces(int n, int k, const FieldRef& spec,
                                const std::optional<std::filesystem::path>& cache_dir) {
    std::optional<std::filesystem::path> file;
    if (cache_dir) {
        file = cache_path(*cache_dir, n, k, *spec);
        if (auto cached = load_cache(*file, n, k, spec)) return std::move(*cached);
    }

    SubspaceSet set;
    if (k == 0) {
        set.push_back(Subspace::zero(spec, n));
    } else {
        Matrix m(spec, k, n);
        enumerate_subspaces_visit(n, k, spec, [&](const std::uint16_t* rows) {
            std::copy(rows, rows + size_t(k) * n, m.row_data(0));
            set.push_back(Subspace::from_matrix(m));
        });
    }
    if (file) save_cache(*file, n, k, spec, set);
    return set;
}

}  // namespace quadgraph
