#include "trisdp/problems_io.hpp"

#include "trisdp/rng.hpp"

#include <Eigen/SVD>

#include <nlohmann/json.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace trisdp {

namespace {

Matrix random_symmetric(Xoshiro256pp& rng, Index n, double lo, double hi) {
  Matrix a(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      const double v = rng.uniform(lo, hi);
      a(i, j) = v;
      a(j, i) = v;
    }
  return a;
}

Matrix random_dense(Xoshiro256pp& rng, Index rows, Index cols, double lo,
                    double hi) {
  Matrix w(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) w(i, j) = rng.uniform(lo, hi);
  return w;
}

}  // namespace

GeneratedSdp gen_random_sdp(Index n, Index m, std::uint64_t seed) {
  if (n < 2 || m < 1) throw DimensionMismatch("gen_random_sdp: need n >= 2, m >= 1");
  Xoshiro256pp rng(seed);
  std::vector<Matrix> a;
  a.reserve(static_cast<size_t>(m));
  for (Index j = 0; j < m; ++j) a.push_back(random_symmetric(rng, n, -1.0, 1.0));

  const Matrix w = random_dense(rng, n, n, -1.0, 1.0);
  const Matrix x0 = w * w.transpose() + 0.1 * Matrix::Identity(n, n);
  Vector y0(m);
  for (Index j = 0; j < m; ++j) y0[j] = rng.uniform(-1.0, 1.0);
  const Matrix v = random_dense(rng, n, n, -1.0, 1.0);
  const Matrix z0 = v * v.transpose() + 0.1 * Matrix::Identity(n, n);

  // b and C close the feasibility identities exactly.
  Vector b(m);
  for (Index j = 0; j < m; ++j) b[j] = a[static_cast<size_t>(j)].cwiseProduct(x0).sum();
  Matrix c = z0;
  for (Index j = 0; j < m; ++j) c += y0[j] * a[static_cast<size_t>(j)];

  GeneratedSdp out{SdpProblem(std::move(c), std::move(a), std::move(b)),
                   PrimalDualTriple{x0, y0, z0}};
  return out;
}

SdpProblem gen_maxcut(Index n, double density, std::uint64_t seed) {
  if (n < 2) throw DimensionMismatch("gen_maxcut: need n >= 2");
  if (density <= 0.0 || density > 1.0)
    throw DimensionMismatch("gen_maxcut: density must be in (0, 1]");
  Xoshiro256pp rng(seed);
  Matrix b_adj = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const double present = rng.uniform();
      const double weight = rng.uniform();
      if (present < density) {
        b_adj(i, j) = weight;
        b_adj(j, i) = weight;
      }
    }
  const Vector degrees = b_adj.rowwise().sum();
  Matrix c = 0.25 * (b_adj - Matrix(degrees.asDiagonal()));
  std::vector<Matrix> a;
  a.reserve(static_cast<size_t>(n));
  for (Index j = 0; j < n; ++j) {
    Matrix ej = Matrix::Zero(n, n);
    ej(j, j) = 1.0;
    a.push_back(std::move(ej));
  }
  return SdpProblem(std::move(c), std::move(a), Vector::Ones(n));
}

namespace {

// Real embedding of a Hermitian matrix P + iQ (P symmetric, Q antisymmetric):
// [[P, −Q],[Q, P]], symmetric of doubled order with the same spectrum twice.
Matrix embed_hermitian(const Matrix& p_part, const Matrix& q_part) {
  const Index nc = p_part.rows();
  Matrix e = Matrix::Zero(2 * nc, 2 * nc);
  e.topLeftCorner(nc, nc) = p_part;
  e.bottomRightCorner(nc, nc) = p_part;
  e.topRightCorner(nc, nc) = -q_part;
  e.bottomLeftCorner(nc, nc) = q_part;
  return e;
}

// Off-diagonal block arrangement [[0, B],[±Bᵀ, 0]] of order p+q.
Matrix corner_block(const Matrix& b, bool antisymmetric) {
  const Index p = b.rows();
  const Index q = b.cols();
  Matrix m = Matrix::Zero(p + q, p + q);
  m.topRightCorner(p, q) = b;
  m.bottomLeftCorner(q, p) = antisymmetric ? Matrix(-b.transpose())
                                           : Matrix(b.transpose());
  return m;
}

}  // namespace

NormMinInstance gen_normmin(Index p, Index q, Index m, std::uint64_t seed) {
  if (p < 1 || q < 1 || m < 0)
    throw DimensionMismatch("gen_normmin: need p, q >= 1 and m >= 0");
  Xoshiro256pp rng(seed);
  std::vector<Matrix> b_mats;
  b_mats.reserve(static_cast<size_t>(m) + 1);
  for (Index k = 0; k <= m; ++k) b_mats.push_back(random_dense(rng, p, q, 0.0, 1.0));

  const Index order = 2 * (p + q);
  std::vector<Matrix> a;
  a.reserve(static_cast<size_t>(1 + 2 * m));
  Vector b = Vector::Zero(1 + 2 * m);

  // t-coefficient first: <−I, X> = −1 normalizes the dual slack to tI − M(z).
  a.push_back(-Matrix::Identity(order, order));
  b[0] = -1.0;
  // Real parts x_k, then imaginary parts y_k.
  for (Index k = 1; k <= m; ++k)
    a.push_back(embed_hermitian(corner_block(b_mats[static_cast<size_t>(k)], false),
                                Matrix::Zero(p + q, p + q)));
  for (Index k = 1; k <= m; ++k)
    a.push_back(embed_hermitian(Matrix::Zero(p + q, p + q),
                                corner_block(b_mats[static_cast<size_t>(k)], true)));

  Matrix c = -embed_hermitian(corner_block(b_mats[0], false),
                              Matrix::Zero(p + q, p + q));

  NormMinInstance inst{SdpProblem(std::move(c), std::move(a), std::move(b)),
                       std::move(b_mats), p, q, m};
  return inst;
}

Scalar NormMinInstance::norm_at(const Vector& zx, const Vector& zy) const {
  if (zx.size() != zdim || zy.size() != zdim)
    throw DimensionMismatch("norm_at: coefficient length mismatch");
  Eigen::MatrixXcd combined = b_mats[0].cast<std::complex<double>>();
  for (Index k = 0; k < zdim; ++k)
    combined += std::complex<double>(zx[k], zy[k]) *
                b_mats[static_cast<size_t>(k) + 1].cast<std::complex<double>>();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(combined);
  return svd.singularValues()[0];
}

namespace {

std::string format_value(Scalar v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct SdpaEntry {
  long matno, blkno, i, j;
  Scalar value;
};

}  // namespace

SdpProblem read_sdpa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::string line;
  long lineno = 0;

  auto next_content_line = [&](bool allow_comment) -> std::string {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      if (allow_comment && (line[0] == '*' || line[0] == '"')) continue;
      return line;
    }
    throw ParseError("unexpected end of file", lineno);
  };

  auto parse_long = [&](const std::string& text) {
    std::istringstream ss(text);
    long v;
    if (!(ss >> v)) throw ParseError("expected an integer", lineno);
    return v;
  };

  const long m = parse_long(next_content_line(true));
  if (m < 1) throw ParseError("constraint count must be >= 1", lineno);
  const long nblocks = parse_long(next_content_line(false));
  if (nblocks < 1) throw ParseError("block count must be >= 1", lineno);

  std::vector<long> block_sizes(static_cast<size_t>(nblocks));
  std::vector<long> block_offsets(static_cast<size_t>(nblocks));
  {
    std::istringstream ss(next_content_line(false));
    long total = 0;
    for (long k = 0; k < nblocks; ++k) {
      long size;
      if (!(ss >> size) || size == 0)
        throw ParseError("bad block size list", lineno);
      block_offsets[static_cast<size_t>(k)] = total;
      block_sizes[static_cast<size_t>(k)] = size;
      total += std::abs(size);
    }
  }
  const long n = block_offsets.back() + std::abs(block_sizes.back());

  Vector b(m);
  {
    std::istringstream ss(next_content_line(false));
    for (long j = 0; j < m; ++j)
      if (!(ss >> b[j])) throw ParseError("right-hand side too short", lineno);
  }

  Matrix c = Matrix::Zero(n, n);
  std::vector<Matrix> a(static_cast<size_t>(m), Matrix::Zero(n, n));
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    SdpaEntry e;
    if (!(ss >> e.matno >> e.blkno >> e.i >> e.j >> e.value))
      throw ParseError("expected 'matno blkno i j value'", lineno);
    if (e.matno < 0 || e.matno > m) throw ParseError("matrix index out of range", lineno);
    if (e.blkno < 1 || e.blkno > nblocks) throw ParseError("block index out of range", lineno);
    const long size = block_sizes[static_cast<size_t>(e.blkno - 1)];
    const long extent = std::abs(size);
    if (e.i < 1 || e.j < 1 || e.i > extent || e.j > extent)
      throw ParseError("entry index out of block range", lineno);
    if (e.i > e.j) throw ParseError("lower-triangle entry (need i <= j)", lineno);
    if (size < 0 && e.i != e.j)
      throw ParseError("off-diagonal entry in a diagonal block", lineno);
    const long off = block_offsets[static_cast<size_t>(e.blkno - 1)];
    const long gi = off + e.i - 1;
    const long gj = off + e.j - 1;
    Matrix& target = e.matno == 0 ? c : a[static_cast<size_t>(e.matno - 1)];
    target(gi, gj) = e.value;
    target(gj, gi) = e.value;
  }
  return SdpProblem(std::move(c), std::move(a), std::move(b));
}

void write_sdpa(const SdpProblem& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << p.m() << "\n";
  out << 1 << "\n";
  out << p.n() << "\n";
  for (Index j = 0; j < p.m(); ++j)
    out << (j ? " " : "") << format_value(p.b()[j]);
  out << "\n";
  auto write_matrix = [&](const Matrix& mat, Index matno) {
    for (Index i = 0; i < mat.rows(); ++i)
      for (Index j = i; j < mat.cols(); ++j)
        if (mat(i, j) != 0.0)
          out << matno << " 1 " << (i + 1) << " " << (j + 1) << " "
              << format_value(mat(i, j)) << "\n";
  };
  write_matrix(p.c(), 0);
  for (Index j = 0; j < p.m(); ++j) write_matrix(p.a(j), j + 1);
}

void write_sidecar(const std::string& path, const std::string& family,
                   const std::vector<std::pair<std::string, Index>>& dims,
                   std::uint64_t seed, double density) {
  nlohmann::ordered_json doc;
  doc["family"] = family;
  for (const auto& [name, value] : dims) doc[name] = value;
  if (density >= 0.0) doc["density"] = density;
  doc["seed"] = seed;
  doc["format_version"] = 1;
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << doc.dump(2) << "\n";
}

}  // namespace trisdp
