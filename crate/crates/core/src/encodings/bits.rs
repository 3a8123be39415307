use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A bit string packed most-significant-bit first, zero-padded to a
/// byte boundary. Bit 0 is the top bit of the first byte.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitString {
    bytes: Vec<u8>,
    len: usize,
}

impl BitString {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn zeros(len: usize) -> Self {
        BitString {
            bytes: alloc::vec![0; len.div_ceil(8)],
            len,
        }
    }

    /// Takes `len` bits from `bytes`; `None` if the byte count is wrong or
    /// a padding bit is set.
    pub fn from_bytes(bytes: Vec<u8>, len: usize) -> Option<Self> {
        if bytes.len() != len.div_ceil(8) {
            return None;
        }
        let pad = bytes.len() * 8 - len;
        if pad > 0 && bytes[bytes.len() - 1] & ((1u8 << pad) - 1) != 0 {
            return None;
        }
        Some(BitString { bytes, len })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        self.bytes[i / 8] >> (7 - i % 8) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        let mask = 1u8 << (7 - i % 8);
        if value {
            self.bytes[i / 8] |= mask;
        } else {
            self.bytes[i / 8] &= !mask;
        }
    }

    pub fn push(&mut self, value: bool) {
        if self.len % 8 == 0 {
            self.bytes.push(0);
        }
        self.len += 1;
        self.set(self.len - 1, value);
    }

    pub fn count_ones(&self) -> usize {
        self.bytes.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// ASCII `0`/`1`.
    pub fn to_bit_string(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({})", self.to_bit_string())
    }
}

impl FromIterator<bool> for BitString {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let mut b = BitString::new();
        for v in iter {
            b.push(v);
        }
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packs_msb_first() {
        let b: BitString = [false, true, true, false].into_iter().collect();
        assert_eq!(b.as_bytes(), &[0x60]);
        assert_eq!(b.to_bit_string(), "0110");
        assert_eq!(b.count_ones(), 2);
    }

    #[test]
    fn from_bytes_rejects_dirty_padding() {
        assert!(BitString::from_bytes(alloc::vec![0x61], 4).is_none());
        assert!(BitString::from_bytes(alloc::vec![0x60], 4).is_some());
        assert!(BitString::from_bytes(alloc::vec![0x60, 0], 4).is_none());
        assert!(BitString::from_bytes(alloc::vec![], 0).unwrap().is_empty());
    }
}
