#include "phid/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "phid/errors.hpp"

namespace phid::io {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open " + path + " for writing");
  out << text;
  if (!out) throw InvalidInput("failed writing " + path);
}

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Complex parse_entry(const json& e, const std::string& where) {
  if (e.is_number()) return Complex(e.get<double>(), 0.0);
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return Complex(e[0].get<double>(), e[1].get<double>());
  throw InvalidInput(where + ": matrix entries must be numbers or [re, im] pairs");
}

ComplexMatrix parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + ": expected an array of rows");
  const Index rows = static_cast<Index>(j.size());
  Index cols = 0;
  ComplexMatrix M;
  for (Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array()) throw InvalidInput(where + ": expected an array of rows");
    if (i == 0) {
      cols = static_cast<Index>(row.size());
      M.resize(rows, cols);
    }
    if (static_cast<Index>(row.size()) != cols) throw InvalidInput(where + ": ragged rows");
    for (Index k = 0; k < cols; ++k)
      M(i, k) = parse_entry(row[static_cast<std::size_t>(k)], where);
  }
  if (rows == 0) M.resize(0, 0);
  return M;
}

json dump_matrix(const ComplexMatrix& M, bool as_real) {
  json rows = json::array();
  for (Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Index k = 0; k < M.cols(); ++k) {
      if (as_real)
        row.push_back(M(i, k).real());
      else
        row.push_back(json::array({M(i, k).real(), M(i, k).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json dump_matrix(const RealMatrix& M) { return dump_matrix(M.cast<Complex>(), true); }

RealMatrix parse_real_matrix(const json& j, const std::string& where) {
  const ComplexMatrix M = parse_matrix(j, where);
  if (M.size() > 0 && M.imag().cwiseAbs().maxCoeff() != 0.0)
    throw InvalidInput(where + ": expected a real matrix");
  return M.real();
}

ComplexVector parse_cvector(const json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + ": expected an array");
  ComplexVector v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = parse_entry(j[static_cast<std::size_t>(i)], where);
  return v;
}

json dump_cvector(const ComplexVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(json::array({v(i).real(), v(i).imag()}));
  return out;
}

}  // namespace

StateSpaceRealization load_model(const std::string& path) {
  const json j = read_json(path);
  if (!j.is_object()) throw InvalidInput(path + ": expected a JSON object");
  for (const char* key : {"A", "B", "C", "D"})
    if (!j.contains(key)) throw InvalidInput(path + ": missing key " + std::string(key));

  const ComplexMatrix A = parse_matrix(j["A"], path + ":A");
  const ComplexMatrix B = parse_matrix(j["B"], path + ":B");
  const ComplexMatrix C = parse_matrix(j["C"], path + ":C");
  const ComplexMatrix D = parse_matrix(j["D"], path + ":D");
  const bool has_E = j.contains("E");
  const ComplexMatrix E = has_E ? parse_matrix(j["E"], path + ":E")
                                : ComplexMatrix(ComplexMatrix::Identity(A.rows(), A.rows()));

  bool real = true;
  for (const ComplexMatrix* M : {&A, &B, &C, &D, &E})
    if (M->size() > 0 && M->imag().cwiseAbs().maxCoeff() != 0.0) real = false;

  StateSpaceRealization model;
  model.A = A;
  model.B = B;
  model.C = C;
  model.D = D;
  model.E = E;
  model.field = real ? ScalarField::Real : ScalarField::Complex;
  model.check_consistent();
  return model;
}

void save_model(const StateSpaceRealization& model, const std::string& path) {
  const bool as_real = model.is_real();
  json j;
  if (!model.has_identity_E(0.0)) j["E"] = dump_matrix(model.E, as_real);
  j["A"] = dump_matrix(model.A, as_real);
  j["B"] = dump_matrix(model.B, as_real);
  j["C"] = dump_matrix(model.C, as_real);
  j["D"] = dump_matrix(model.D, as_real);
  write_text(path, j.dump(2) + "\n");
}

PortHamiltonianForm load_ph(const std::string& path) {
  const json j = read_json(path);
  if (!j.is_object()) throw InvalidInput(path + ": expected a JSON object");
  PortHamiltonianForm ph;
  struct Slot {
    const char* key;
    RealMatrix* dst;
  };
  Slot slots[] = {{"J", &ph.J}, {"R", &ph.R}, {"G", &ph.G}, {"P", &ph.P},
                  {"N", &ph.N}, {"S", &ph.S}, {"Q", &ph.Q}};
  for (const Slot& s : slots) {
    if (!j.contains(s.key)) throw InvalidInput(path + ": missing key " + std::string(s.key));
    *s.dst = parse_real_matrix(j[s.key], path + ":" + s.key);
  }
  ph.check_invariants();
  return ph;
}

void save_ph(const PortHamiltonianForm& ph, const std::string& path) {
  json j;
  j["J"] = dump_matrix(ph.J);
  j["R"] = dump_matrix(ph.R);
  j["G"] = dump_matrix(ph.G);
  j["P"] = dump_matrix(ph.P);
  j["N"] = dump_matrix(ph.N);
  j["S"] = dump_matrix(ph.S);
  j["Q"] = dump_matrix(ph.Q);
  write_text(path, j.dump(2) + "\n");
}

bool is_ph_file(const std::string& path) {
  const json j = read_json(path);
  return j.is_object() && j.contains("J") && j.contains("R") && j.contains("Q");
}

TangentialDataSet load_tangential(const std::string& path) {
  const json j = read_json(path);
  if (!j.is_object() || !j.contains("m") || !j.contains("D") || !j.contains("rights"))
    throw InvalidInput(path + ": expected keys m, D, rights");

  const Index m = j["m"].get<Index>();
  std::vector<RightDatum> rights;
  for (const json& e : j["rights"]) {
    RightDatum d;
    d.lambda = parse_entry(e.at("lambda"), path + ":lambda");
    d.r = parse_cvector(e.at("r"), path + ":r");
    d.w = parse_cvector(e.at("w"), path + ":w");
    if (d.r.size() != m || d.w.size() != m) throw InvalidInput(path + ": r/w length mismatch");
    rights.push_back(std::move(d));
  }

  TangentialDataSet ds;
  if (j.contains("lefts")) {
    ds.rights = conjugate_closure(rights);
    for (const json& e : j["lefts"]) {
      LeftDatum d;
      d.mu = parse_entry(e.at("mu"), path + ":mu");
      d.ell = parse_cvector(e.at("ell"), path + ":ell").transpose();
      d.v = parse_cvector(e.at("v"), path + ":v").transpose();
      if (d.ell.size() != m || d.v.size() != m) throw InvalidInput(path + ": ell/v length mismatch");
      ds.lefts.push_back(std::move(d));
    }
    ds.lefts = conjugate_closure(ds.lefts);
    ds.lefts_synthesized = false;
  } else {
    ds = left_from_spectral(rights);
  }
  ds.m = m;
  ds.D = parse_real_matrix(j["D"], path + ":D");
  return ds;
}

void save_tangential(const TangentialDataSet& ds, const std::string& path) {
  json j;
  j["m"] = ds.m;
  j["D"] = dump_matrix(ds.D);
  json rights = json::array();
  for (const RightDatum& d : ds.rights) {
    json e;
    e["lambda"] = json::array({d.lambda.real(), d.lambda.imag()});
    e["r"] = dump_cvector(d.r);
    e["w"] = dump_cvector(d.w);
    rights.push_back(std::move(e));
  }
  j["rights"] = std::move(rights);
  if (!ds.lefts_synthesized) {
    json lefts = json::array();
    for (const LeftDatum& d : ds.lefts) {
      json e;
      e["mu"] = json::array({d.mu.real(), d.mu.imag()});
      e["ell"] = dump_cvector(d.ell.transpose());
      e["v"] = dump_cvector(d.v.transpose());
      lefts.push_back(std::move(e));
    }
    j["lefts"] = std::move(lefts);
  }
  write_text(path, j.dump(2) + "\n");
}

FrequencySampleSet load_samples_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);

  std::vector<FrequencySampleSet::Sample> samples;
  Index m = -1;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> vals;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        vals.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw InvalidInput(path + ":" + std::to_string(lineno) + ": bad number '" + cell + "'");
      }
    }
    if (vals.size() < 3 || (vals.size() - 1) % 2 != 0)
      throw InvalidInput(path + ":" + std::to_string(lineno) + ": expected omega plus Re/Im pairs");
    const Index mm = static_cast<Index>(std::llround(std::sqrt(static_cast<double>((vals.size() - 1) / 2))));
    if (static_cast<std::size_t>(mm) * mm * 2 + 1 != vals.size())
      throw InvalidInput(path + ":" + std::to_string(lineno) + ": column count is not 1 + 2 m^2");
    if (m < 0) m = mm;
    if (mm != m) throw InvalidInput(path + ": inconsistent port dimension across rows");

    FrequencySampleSet::Sample s;
    s.omega = vals[0];
    s.Z.resize(m, m);
    std::size_t k = 1;
    for (Index i = 0; i < m; ++i)
      for (Index jcol = 0; jcol < m; ++jcol) {
        s.Z(i, jcol) = Complex(vals[k], vals[k + 1]);
        k += 2;
      }
    samples.push_back(std::move(s));
  }
  if (samples.empty()) throw InvalidInput(path + ": no samples");
  return FrequencySampleSet::from_samples(std::move(samples));
}

void save_samples_csv(const FrequencySampleSet& fs, const std::string& path) {
  std::string text = "# omega";
  for (Index i = 0; i < fs.m; ++i)
    for (Index j = 0; j < fs.m; ++j) {
      const std::string ij = "Z(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      text += ", Re " + ij + ", Im " + ij;
    }
  text += "\n";
  for (const auto& s : fs.samples) {
    text += fmt_double(s.omega);
    for (Index i = 0; i < fs.m; ++i)
      for (Index j = 0; j < fs.m; ++j)
        text += "," + fmt_double(s.Z(i, j).real()) + "," + fmt_double(s.Z(i, j).imag());
    text += "\n";
  }
  write_text(path, text);
}

void save_singular_values_csv(const RealVector& sv, const std::string& path) {
  std::string text = "# index, sigma\n";
  for (Index i = 0; i < sv.size(); ++i)
    text += std::to_string(i + 1) + "," + fmt_double(sv(i)) + "\n";
  write_text(path, text);
}

void save_zeros_csv(const SpectralZeroSet& zs, const std::string& path) {
  const Index m = zs.size() == 0 ? 0 : zs.directions.front().size();
  std::string text = "# Re lambda, Im lambda";
  for (Index i = 0; i < m; ++i)
    text += ", Re r" + std::to_string(i + 1) + ", Im r" + std::to_string(i + 1);
  text += "\n";
  for (std::size_t k = 0; k < zs.size(); ++k) {
    text += fmt_double(zs.zeros[k].real()) + "," + fmt_double(zs.zeros[k].imag());
    for (Index i = 0; i < zs.directions[k].size(); ++i)
      text += "," + fmt_double(zs.directions[k](i).real()) + "," + fmt_double(zs.directions[k](i).imag());
    text += "\n";
  }
  write_text(path, text);
}

void save_sweep_csv(const std::vector<SweepPoint>& sweep, const std::string& path) {
  std::string text = "# omega, lambda_min\n";
  for (const SweepPoint& pt : sweep)
    text += fmt_double(pt.omega) + "," + (pt.valid ? fmt_double(pt.lambda_min) : std::string("nan")) + "\n";
  write_text(path, text);
}

void save_bode_csv(const StateSpaceRealization& model, const std::vector<double>& omegas,
                   const std::string& path) {
  const Index m = model.m();
  std::string text = "# omega";
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      text += ", |Z(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")|";
  text += "\n";
  for (double w : omegas) {
    const ComplexMatrix Z = eval_transfer(model, Complex(0.0, w));
    text += fmt_double(w);
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < m; ++j) text += "," + fmt_double(std::abs(Z(i, j)));
    text += "\n";
  }
  write_text(path, text);
}

RealMatrix load_real_matrix(const std::string& path, const std::string& key) {
  const json j = read_json(path);
  if (j.is_array()) return parse_real_matrix(j, path);
  if (j.is_object() && j.contains(key)) return parse_real_matrix(j[key], path + ":" + key);
  throw InvalidInput(path + ": expected a matrix (array of rows) or an object with key " + key);
}

}  // namespace phid::io
