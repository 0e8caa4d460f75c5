/*
 * Copyright 2026 The pheml Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "pheml/common/error.h"
#include "pheml/common/rng.h"
#include "pheml/phe/cloud_rsa.h"
#include "pheml/phe/key_io.h"
#include "pheml/phe/paillier.h"
#include "pheml/protocols/bench.h"
#include "pheml/protocols/run.h"
#include "pheml/protocols/setup.h"
#include "pheml/protocols/train.h"

namespace py = pybind11;

namespace {

using pheml::BigInt;
using pheml::Rng;

// Python ints cross the boundary as decimal strings.
BigInt ToBig(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

py::int_ FromBig(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

class PaillierKey {
 public:
  PaillierKey(int bits, std::uint64_t seed)
      : rng_(Rng(seed).Fork("python/paillier")),
        kp_(pheml::phe::PaillierKeygen(bits, rng_)) {}

  py::int_ n() const { return FromBig(kp_.pub.n); }
  std::string key_id() const { return kp_.pub.key_id; }

  py::int_ Encrypt(const py::int_& m) {
    return FromBig(pheml::phe::PaillierEncrypt(kp_.pub, ToBig(m), rng_).value);
  }
  py::int_ Decrypt(const py::int_& c) const {
    return FromBig(pheml::phe::PaillierDecrypt(kp_.priv, Ct(c)));
  }
  py::int_ Add(const py::int_& a, const py::int_& b) const {
    return FromBig(pheml::phe::PaillierAdd(kp_.pub, Ct(a), Ct(b)).value);
  }
  py::int_ ScalarMul(const py::int_& c, const py::int_& k) const {
    return FromBig(
        pheml::phe::PaillierScalarPow(kp_.pub, Ct(c), ToBig(k)).value);
  }
  std::string PublicJson() const {
    return pheml::phe::SerializePaillierPublicKey(kp_.pub);
  }

 private:
  pheml::phe::PaillierCiphertext Ct(const py::int_& c) const {
    pheml::phe::PaillierCiphertext ct{ToBig(c), kp_.pub.key_id};
    pheml::phe::ValidatePaillierCiphertext(kp_.pub, ct);
    return ct;
  }

  Rng rng_;
  pheml::phe::PaillierKeyPair kp_;
};

class CloudRsaKey {
 public:
  CloudRsaKey(int bits, std::uint64_t seed) {
    Rng rng = Rng(seed).Fork("python/cloudrsa");
    key_ = pheml::phe::CloudRsaKeygen(bits, rng);
  }

  py::int_ n() const { return FromBig(key_.n); }
  std::string key_id() const { return key_.key_id; }

  py::int_ Encrypt(const py::int_& m) const {
    return FromBig(pheml::phe::CloudRsaEncrypt(key_.EncryptionKey(), ToBig(m)).value);
  }
  py::int_ Decrypt(const py::int_& c) const {
    return FromBig(pheml::phe::CloudRsaDecrypt(key_, Ct(c)));
  }
  py::int_ Mul(const py::int_& a, const py::int_& b) const {
    return FromBig(pheml::phe::CloudRsaMul(key_.Public(), Ct(a), Ct(b)).value);
  }
  py::int_ Pow(const py::int_& c, const py::int_& k) const {
    return FromBig(pheml::phe::CloudRsaPow(key_.Public(), Ct(c), ToBig(k)).value);
  }
  std::string Json(bool public_only) const {
    return pheml::phe::SerializeCloudRsaKey(key_, public_only);
  }

 private:
  pheml::phe::CloudRsaCiphertext Ct(const py::int_& c) const {
    pheml::phe::CloudRsaCiphertext ct{ToBig(c), key_.key_id};
    pheml::phe::ValidateCloudRsaCiphertext(key_.Public(), ct);
    return ct;
  }

  pheml::phe::CloudRsaKeyMaterial key_;
};

py::dict RunProtocol(const std::string& protocol, const std::string& dataset,
                     const std::string& schema, int owners, int key_bits,
                     int iters, std::optional<double> lambda, int latency_ms,
                     std::uint64_t seed, double test_fraction,
                     bool quantized_oracle) {
  pheml::protocols::RunSpec spec;
  spec.protocol = pheml::protocols::ParseProtocol(protocol);
  spec.dataset = dataset;
  spec.schema = schema;
  spec.owners = owners;
  spec.key_bits = key_bits;
  spec.iters = iters;
  spec.lambda = lambda;
  spec.latency_ms = latency_ms;
  spec.seed = seed;
  spec.test_fraction = test_fraction;
  spec.quantized_oracle = quantized_oracle;
  pheml::protocols::RunResult r;
  {
    py::gil_scoped_release release;
    r = pheml::protocols::Run(spec);
  }
  py::dict out;
  out["metrics"] = r.metrics.dump();
  out["audit_pass"] = r.audit.pass();
  out["audit"] = r.audit.Summary();
  out["transcript"] = r.transcript.lines;
  if (r.oracle_accuracy) out["oracle_accuracy"] = *r.oracle_accuracy;
  if (r.trace_match) out["trace_match"] = *r.trace_match;
  return out;
}

void CheckLrBudget(int d, double theta_l1_bound, int key_bits) {
  pheml::protocols::TrainConfig cfg;
  cfg.key_bits = key_bits;
  cfg.theta_l1_bound = theta_l1_bound;
  pheml::protocols::CheckLrBudget(d, cfg);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of pheml";

  static py::exception<pheml::Error> error(m, "PhemlError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const pheml::Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<PaillierKey>(m, "PaillierKey")
      .def(py::init<int, std::uint64_t>(), py::arg("bits") = 1024,
           py::arg("seed") = 1)
      .def_property_readonly("n", &PaillierKey::n)
      .def_property_readonly("key_id", &PaillierKey::key_id)
      .def("encrypt", &PaillierKey::Encrypt)
      .def("decrypt", &PaillierKey::Decrypt)
      .def("add", &PaillierKey::Add)
      .def("scalar_mul", &PaillierKey::ScalarMul)
      .def("public_json", &PaillierKey::PublicJson);

  py::class_<CloudRsaKey>(m, "CloudRsaKey")
      .def(py::init<int, std::uint64_t>(), py::arg("bits") = 1024,
           py::arg("seed") = 1)
      .def_property_readonly("n", &CloudRsaKey::n)
      .def_property_readonly("key_id", &CloudRsaKey::key_id)
      .def("encrypt", &CloudRsaKey::Encrypt)
      .def("decrypt", &CloudRsaKey::Decrypt)
      .def("mul", &CloudRsaKey::Mul)
      .def("pow", &CloudRsaKey::Pow)
      .def("to_json", &CloudRsaKey::Json, py::arg("public_only") = false);

  m.def("run", &RunProtocol, py::arg("protocol"), py::arg("dataset"),
        py::arg("schema"), py::arg("owners") = 5, py::arg("key_bits") = 1024,
        py::arg("iters") = 200, py::arg("lambda_") = std::nullopt,
        py::arg("latency_ms") = 0, py::arg("seed") = 1,
        py::arg("test_fraction") = 0.3, py::arg("quantized_oracle") = false);
  m.def("check_lr_budget", &CheckLrBudget, py::arg("d"),
        py::arg("theta_l1_bound"), py::arg("key_bits"));
  m.def("rsa_bits_for", &pheml::protocols::RsaBitsFor, py::arg("d"),
        py::arg("theta_l1_bound"), py::arg("key_bits"));
  m.def(
      "bench_blocks",
      [](int key_bits, int trials, std::uint64_t seed) {
        return pheml::protocols::BenchCsv(
            pheml::protocols::BenchBlocks(key_bits, trials, seed));
      },
      py::arg("key_bits") = 512, py::arg("trials") = 1, py::arg("seed") = 1);
}
