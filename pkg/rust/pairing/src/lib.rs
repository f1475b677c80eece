//! Minimal BLS12-381 bindings for the prsig curve backend: G1/G2/GT group
//! operations, the ate pairing, compressed (de)serialization with subgroup
//! validation, and hash-to-G1.
//!
//! Scalars cross the FFI boundary as 32-byte big-endian strings and are
//! reduced mod the scalar field order r.

use ark_bls12_381::{Bls12_381, Fr, G1Affine, G1Projective, G2Affine, G2Projective};
use ark_ec::hashing::curve_maps::wb::WBMap;
use ark_ec::hashing::map_to_curve_hasher::MapToCurveBasedHasher;
use ark_ec::hashing::HashToCurve;
use ark_ec::pairing::{Pairing, PairingOutput};
use ark_ec::{CurveGroup, Group};
use ark_ff::field_hashers::DefaultFieldHasher;
use ark_ff::{BigInteger, PrimeField, Zero};
use ark_serialize::{CanonicalDeserialize, CanonicalSerialize};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyBytes;
use sha2::Sha256;

fn scalar_from_be(bytes: &[u8]) -> Fr {
    Fr::from_be_bytes_mod_order(bytes)
}

fn to_py_bytes<'py, T: CanonicalSerialize>(py: Python<'py>, v: &T) -> Bound<'py, PyBytes> {
    let mut buf = Vec::new();
    v.serialize_compressed(&mut buf).expect("serialization cannot fail");
    PyBytes::new_bound(py, &buf)
}

#[pyclass(frozen, name = "G1")]
#[derive(Clone)]
pub struct PyG1(G1Projective);

#[pymethods]
impl PyG1 {
    #[staticmethod]
    fn generator() -> Self {
        PyG1(G1Projective::generator())
    }

    #[staticmethod]
    fn identity() -> Self {
        PyG1(G1Projective::zero())
    }

    /// Decode a 48-byte compressed point; rejects encodings that are not
    /// canonical, not on the curve, or outside the prime-order subgroup.
    #[staticmethod]
    fn from_bytes(data: &[u8]) -> PyResult<Self> {
        let affine = G1Affine::deserialize_compressed(data)
            .map_err(|e| PyValueError::new_err(format!("invalid G1 encoding: {e}")))?;
        Ok(PyG1(affine.into()))
    }

    /// Hash-to-curve (WB-SSWU, SHA-256 expand_message_xmd) with caller-chosen
    /// domain separation tag.
    #[staticmethod]
    fn hash(msg: &[u8], dst: &[u8]) -> PyResult<Self> {
        let hasher = MapToCurveBasedHasher::<
            G1Projective,
            DefaultFieldHasher<Sha256, 128>,
            WBMap<ark_bls12_381::g1::Config>,
        >::new(dst)
        .map_err(|e| PyValueError::new_err(format!("hash-to-curve setup: {e}")))?;
        let point: G1Affine = hasher
            .hash(msg)
            .map_err(|e| PyValueError::new_err(format!("hash-to-curve: {e}")))?;
        Ok(PyG1(point.into()))
    }

    fn add(&self, other: &PyG1) -> Self {
        PyG1(self.0 + other.0)
    }

    fn mul(&self, scalar_be: &[u8]) -> Self {
        PyG1(self.0 * scalar_from_be(scalar_be))
    }

    fn eq(&self, other: &PyG1) -> bool {
        self.0 == other.0
    }

    fn is_identity(&self) -> bool {
        self.0.is_zero()
    }

    fn to_bytes<'py>(&self, py: Python<'py>) -> Bound<'py, PyBytes> {
        to_py_bytes(py, &self.0.into_affine())
    }
}

#[pyclass(frozen, name = "G2")]
#[derive(Clone)]
pub struct PyG2(G2Projective);

#[pymethods]
impl PyG2 {
    #[staticmethod]
    fn generator() -> Self {
        PyG2(G2Projective::generator())
    }

    #[staticmethod]
    fn identity() -> Self {
        PyG2(G2Projective::zero())
    }

    /// Decode a 96-byte compressed point with full validation.
    #[staticmethod]
    fn from_bytes(data: &[u8]) -> PyResult<Self> {
        let affine = G2Affine::deserialize_compressed(data)
            .map_err(|e| PyValueError::new_err(format!("invalid G2 encoding: {e}")))?;
        Ok(PyG2(affine.into()))
    }

    fn add(&self, other: &PyG2) -> Self {
        PyG2(self.0 + other.0)
    }

    fn mul(&self, scalar_be: &[u8]) -> Self {
        PyG2(self.0 * scalar_from_be(scalar_be))
    }

    fn eq(&self, other: &PyG2) -> bool {
        self.0 == other.0
    }

    fn is_identity(&self) -> bool {
        self.0.is_zero()
    }

    fn to_bytes<'py>(&self, py: Python<'py>) -> Bound<'py, PyBytes> {
        to_py_bytes(py, &self.0.into_affine())
    }
}

/// Target-group element. The group law (multiplication in GT) is exposed as
/// `mul`, exponentiation as `pow`.
#[pyclass(frozen, name = "Gt")]
#[derive(Clone)]
pub struct PyGt(PairingOutput<Bls12_381>);

#[pymethods]
impl PyGt {
    #[staticmethod]
    fn identity() -> Self {
        PyGt(PairingOutput::zero())
    }

    fn mul(&self, other: &PyGt) -> Self {
        PyGt(self.0 + other.0)
    }

    fn pow(&self, scalar_be: &[u8]) -> Self {
        PyGt(self.0.mul_bigint(scalar_from_be(scalar_be).into_bigint()))
    }

    fn eq(&self, other: &PyGt) -> bool {
        self.0 == other.0
    }

    fn is_identity(&self) -> bool {
        self.0.is_zero()
    }

    fn to_bytes<'py>(&self, py: Python<'py>) -> Bound<'py, PyBytes> {
        to_py_bytes(py, &self.0)
    }
}

#[pyfunction]
fn pair(u: &PyG1, v: &PyG2) -> PyGt {
    PyGt(Bls12_381::pairing(u.0.into_affine(), v.0.into_affine()))
}

/// Order of the prime-order groups (the scalar field modulus r), big-endian hex.
#[pyfunction]
fn group_order_hex() -> String {
    let bytes = Fr::MODULUS.to_bytes_be();
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[pymodule]
fn _pairing(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyG1>()?;
    m.add_class::<PyG2>()?;
    m.add_class::<PyGt>()?;
    m.add_function(wrap_pyfunction!(pair, m)?)?;
    m.add_function(wrap_pyfunction!(group_order_hex, m)?)?;
    Ok(())
}
