#include "sbsurf/quadrature.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

namespace sbsurf {

namespace {

constexpr double kPi = std::numbers::pi;

// Kahan-compensated accumulator for complex values.
struct Kahan {
  cplx sum{};
  cplx comp{};
  void add(cplx x) {
    const cplx y = x - comp;
    const cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

constexpr std::size_t kChunk = 2048;

// Pairwise reduction in fixed chunk order.
template <class T, class Add>
T pairwise(std::vector<T>& v, std::size_t lo, std::size_t hi, Add add) {
  if (hi - lo == 1) return v[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  T a = pairwise(v, lo, mid, add);
  const T b = pairwise(v, mid, hi, add);
  add(a, b);
  return a;
}

template <class PerNode, class ChunkState>
void run_chunks(std::size_t n_nodes, int jobs, std::vector<ChunkState>& out, PerNode per_chunk) {
  const std::size_t n_chunks = (n_nodes + kChunk - 1) / kChunk;
  out.resize(n_chunks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    try {
      for (;;) {
        const std::size_t c = next.fetch_add(1);
        if (c >= n_chunks) return;
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(lo + kChunk, n_nodes);
        per_chunk(c, lo, hi, out[c]);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(n_chunks);
    }
  };
  const int nw = std::max(1, jobs);
  if (nw == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(nw);
    for (int t = 0; t < nw; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

int default_jobs() {
  if (const char* env = std::getenv("SBSURF_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

QuadratureGrid build_grid(Chart model, int resolution, double log_r_offset) {
  if (resolution < 4) throw std::invalid_argument("build_grid: resolution must be >= 4");
  const int n = resolution;
  QuadratureGrid g;
  g.model = model;
  g.resolution = n;
  g.nodes.reserve(std::size_t(n) * n * n * n);
  g.weights.reserve(std::size_t(n) * n * n * n);

  if (model == Chart::torus) {
    const double w = 1.0 / (double(n) * n * n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            Point p;
            p.chart = Chart::torus;
            p.z1 = cplx(double(a) / n, double(c) / n);
            p.z2 = cplx(double(b) / n, double(d) / n);
            g.nodes.push_back(p);
            g.weights.push_back(w);
          }
    return g;
  }

  std::vector<double> xs, ws, xa, wa;
  gauss_legendre(n, xs, ws);
  gauss_legendre(n, xa, wa);
  const double wphase = (2.0 * kPi / n) * (2.0 * kPi / n);

  for (int a = 0; a < n; ++a) {
    // radial node and Lebesgue factor r^3 dr
    double r, wr;
    if (model == Chart::hopf) {
      const double L = std::log(2.0);
      const double sgl = log_r_offset + 0.5 * L * (xs[a] + 1.0);
      r = std::exp(sgl);
      wr = 0.5 * L * ws[a] * std::exp(4.0 * sgl);  // r^3 dr = e^{4s} ds
    } else {
      // r^2 = u/(1-u) compactification; r^3 dr = u du / (2 (1-u)^3).
      // Reaches only rho ~ N^2 at the deepest node, which keeps the
      // curvature assembly well conditioned in double precision.
      const double u = 0.5 * (xs[a] + 1.0);
      r = std::sqrt(u / (1.0 - u));
      const double om = 1.0 - u;
      wr = 0.5 * ws[a] * 0.5 * u / (om * om * om);
    }
    for (int b = 0; b < n; ++b) {
      const double al = 0.25 * kPi * (xa[b] + 1.0);
      const double wal = 0.25 * kPi * wa[b] * std::sin(al) * std::cos(al);
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const double be = 2.0 * kPi * c / n, ga = 2.0 * kPi * d / n;
          Point p;
          p.chart = model;
          p.z1 = r * std::sin(al) * cplx(std::cos(be), std::sin(be));
          p.z2 = r * std::cos(al) * cplx(std::cos(ga), std::sin(ga));
          g.nodes.push_back(p);
          g.weights.push_back(wr * wal * wphase);
        }
    }
  }
  return g;
}

cplx integrate(const std::function<cplx(const Point&)>& f, const MetricField& m,
               const QuadratureGrid& g, int jobs) {
  if (jobs <= 0) jobs = default_jobs();
  std::vector<cplx> chunks;
  run_chunks(g.nodes.size(), jobs, chunks, [&](std::size_t, std::size_t lo, std::size_t hi, cplx& out) {
    Kahan acc;
    for (std::size_t k = lo; k < hi; ++k) {
      const Point& p = g.nodes[k];
      const MetricJet mj = metric_jet(m, p);
      const cplx v = f(p);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream msg;
        msg << "integrate: non-finite integrand at node z1=(" << p.z1.real() << "," << p.z1.imag()
            << ") z2=(" << p.z2.real() << "," << p.z2.imag() << ")";
        throw std::runtime_error(msg.str());
      }
      acc.add(g.weights[k] * 4.0 * mj.det.v * v);
    }
    out = acc.sum;
  });
  return pairwise(chunks, 0, chunks.size(), [](cplx& a, const cplx& b) { a += b; });
}

Blocks integrate_blocks(const MetricField& m, const QuadratureGrid& g, int jobs, JetMode mode) {
  if (jobs <= 0) jobs = default_jobs();
  struct ChunkSum {
    std::array<Kahan, kNumBlocks> acc;
  };
  std::vector<ChunkSum> chunks;
  run_chunks(g.nodes.size(), jobs, chunks,
             [&](std::size_t, std::size_t lo, std::size_t hi, ChunkSum& out) {
               for (std::size_t k = lo; k < hi; ++k) {
                 const PointSample s = sample_point(m, g.nodes[k], mode);
                 const Blocks b = blocks_at(s);
                 const double wd = g.weights[k] * 4.0 * s.mj.det.v.real();
                 for (int i = 0; i < kNumBlocks; ++i) out.acc[i].add(wd * b[i]);
               }
             });
  Blocks total{};
  for (int i = 0; i < kNumBlocks; ++i) {
    std::vector<cplx> parts(chunks.size());
    for (std::size_t c = 0; c < chunks.size(); ++c) parts[c] = chunks[c].acc[i].sum;
    total[i] = pairwise(parts, 0, parts.size(), [](cplx& a, const cplx& b) { a += b; });
  }
  return total;
}

cplx l2_pairing(const std::function<Form(const Point&)>& A,
                const std::function<Form(const Point&)>& B, const MetricField& m,
                const QuadratureGrid& g, int jobs) {
  return integrate(
      [&](const Point& p) {
        const MetricJet mj = metric_jet(m, p);
        const MetricOps<cplx> ops = metric_ops(mj);
        return inner(A(p), B(p), ops);
      },
      m, g, jobs);
}

}  // namespace sbsurf
