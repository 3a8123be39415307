//! Binary container for encodings: `PEENC`, version, scheme, semantics,
//! `n` and `r` as big-endian u32, then the payload packed MSB-first.

use arglab_core::encodings::{BitString, Encoding, Scheme};
use arglab_core::Semantics;

use crate::error::{LabError, LabResult};

const FORMAT: &str = "encoding container";
const MAGIC: &[u8; 5] = b"PEENC";
const VERSION: u8 = 0x01;
const HEADER_LEN: usize = 5 + 3 + 8;

fn scheme_byte(s: Scheme) -> u8 {
    match s {
        Scheme::Tab => 0x01,
        Scheme::TruthTable => 0x02,
        Scheme::Adjacency => 0x03,
    }
}

fn semantics_byte(s: Semantics) -> LabResult<u8> {
    match s {
        Semantics::Preferred => Ok(0x01),
        Semantics::Stable => Ok(0x02),
        other => Err(LabError::format(
            FORMAT,
            format!("no code for {other} semantics"),
        )),
    }
}

pub fn write_container(e: &Encoding) -> LabResult<Vec<u8>> {
    let as_u32 = |v: usize, what: &str| {
        u32::try_from(v)
            .map_err(|_| LabError::format(FORMAT, format!("{what} {v} exceeds 32 bits")))
    };
    let mut out = Vec::with_capacity(HEADER_LEN + e.payload.as_bytes().len());
    out.extend_from_slice(MAGIC);
    out.push(VERSION);
    out.push(scheme_byte(e.scheme));
    out.push(semantics_byte(e.semantics)?);
    out.extend_from_slice(&as_u32(e.n, "n")?.to_be_bytes());
    out.extend_from_slice(&as_u32(e.rows, "r")?.to_be_bytes());
    out.extend_from_slice(e.payload.as_bytes());
    Ok(out)
}

pub fn read_container(bytes: &[u8]) -> LabResult<Encoding> {
    if bytes.len() < HEADER_LEN || &bytes[..5] != MAGIC {
        return Err(LabError::format(FORMAT, "missing PEENC header"));
    }
    if bytes[5] != VERSION {
        return Err(LabError::format(
            FORMAT,
            format!("unsupported version {}", bytes[5]),
        ));
    }
    let scheme = match bytes[6] {
        0x01 => Scheme::Tab,
        0x02 => Scheme::TruthTable,
        0x03 => Scheme::Adjacency,
        b => {
            return Err(LabError::format(
                FORMAT,
                format!("unknown scheme byte {b:#04x}"),
            ))
        }
    };
    let semantics = match bytes[7] {
        0x01 => Semantics::Preferred,
        0x02 => Semantics::Stable,
        b => {
            return Err(LabError::format(
                FORMAT,
                format!("unknown semantics byte {b:#04x}"),
            ))
        }
    };
    let word = |at: usize| u32::from_be_bytes(bytes[at..at + 4].try_into().unwrap()) as usize;
    let (n, rows) = (word(8), word(12));
    let len = match scheme {
        Scheme::Tab => n.checked_mul(rows),
        Scheme::TruthTable => u32::try_from(n).ok().and_then(|n| 1usize.checked_shl(n)),
        Scheme::Adjacency => n.checked_mul(n),
    }
    .ok_or_else(|| LabError::format(FORMAT, "payload length overflows"))?;
    let payload = BitString::from_bytes(bytes[HEADER_LEN..].to_vec(), len).ok_or_else(|| {
        LabError::format(
            FORMAT,
            format!(
                "payload of {} bytes does not hold exactly {len} bits",
                bytes.len() - HEADER_LEN
            ),
        )
    })?;
    Ok(Encoding::new(scheme, semantics, n, rows, payload)?)
}
