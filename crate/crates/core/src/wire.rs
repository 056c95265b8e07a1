//! Binary layout shared by every serialized key and signature.
//!
//! ```text
//! magic      8 bytes   b"RSSC" ‖ object kind ‖ format version ‖ 0x00 0x00
//! descriptor           u16 BE name length ‖ name bytes
//!                      u16 BE order length ‖ group order, big-endian
//!                      u32 BE g1 encoded length
//!                      u32 BE g2 encoded length
//! n          4 bytes   u32 BE message length (message count for PS keys)
//! body                 element encodings in declared field order
//! ```
//!
//! Multi-byte integers are big-endian throughout. The descriptor must match
//! the backend performing the decode; anything else is a
//! [`Error::Compatibility`].

use crate::error::{Error, Result};
use crate::group::{check_descriptor, BackendDescriptor, PairingBackend};

const MAGIC_PREFIX: &[u8; 4] = b"RSSC";
const FORMAT_VERSION: u8 = 1;

/// Object kind discriminator inside the 8-byte magic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ObjectKind {
    RssPublicKey = 0x01,
    RssSecretKey = 0x02,
    RssSignature = 0x03,
    PsPublicKey = 0x11,
    PsSecretKey = 0x12,
    PsSignature = 0x13,
}

impl ObjectKind {
    fn label(self) -> &'static str {
        match self {
            ObjectKind::RssPublicKey => "RSS public key",
            ObjectKind::RssSecretKey => "RSS secret key",
            ObjectKind::RssSignature => "RSS signature",
            ObjectKind::PsPublicKey => "PS public key",
            ObjectKind::PsSecretKey => "PS secret key",
            ObjectKind::PsSignature => "PS signature",
        }
    }

    fn from_byte(byte: u8) -> Option<Self> {
        match byte {
            0x01 => Some(ObjectKind::RssPublicKey),
            0x02 => Some(ObjectKind::RssSecretKey),
            0x03 => Some(ObjectKind::RssSignature),
            0x11 => Some(ObjectKind::PsPublicKey),
            0x12 => Some(ObjectKind::PsSecretKey),
            0x13 => Some(ObjectKind::PsSignature),
            _ => None,
        }
    }
}

pub(crate) struct Writer {
    buf: Vec<u8>,
}

impl Writer {
    pub fn new() -> Self {
        Writer { buf: Vec::new() }
    }

    pub fn header(kind: ObjectKind, descriptor: &BackendDescriptor, n: u32) -> Self {
        let mut w = Writer::new();
        w.bytes(MAGIC_PREFIX);
        w.byte(kind as u8);
        w.byte(FORMAT_VERSION);
        w.bytes(&[0, 0]);
        w.descriptor(descriptor);
        w.u32(n);
        w
    }

    pub fn byte(&mut self, b: u8) {
        self.buf.push(b);
    }

    pub fn bytes(&mut self, bytes: &[u8]) {
        self.buf.extend_from_slice(bytes);
    }

    pub fn u32(&mut self, v: u32) {
        self.bytes(&v.to_be_bytes());
    }

    /// u16 BE length prefix followed by the raw bytes.
    pub fn block16(&mut self, bytes: &[u8]) {
        debug_assert!(bytes.len() <= u16::MAX as usize);
        self.bytes(&(bytes.len() as u16).to_be_bytes());
        self.bytes(bytes);
    }

    fn descriptor(&mut self, d: &BackendDescriptor) {
        self.block16(d.name.as_bytes());
        self.block16(&d.group_order_be);
        self.u32(d.g1_encoded_len);
        self.u32(d.g2_encoded_len);
    }

    pub fn finish(self) -> Vec<u8> {
        self.buf
    }
}

pub(crate) struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    pub fn new(buf: &'a [u8]) -> Self {
        Reader { buf, pos: 0 }
    }

    pub fn take(&mut self, len: usize) -> Result<&'a [u8]> {
        if self.buf.len() - self.pos < len {
            return Err(Error::Encoding(format!(
                "truncated input: wanted {} more bytes, {} left",
                len,
                self.buf.len() - self.pos
            )));
        }
        let slice = &self.buf[self.pos..self.pos + len];
        self.pos += len;
        Ok(slice)
    }

    pub fn byte(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    pub fn u16(&mut self) -> Result<u16> {
        Ok(u16::from_be_bytes(self.take(2)?.try_into().expect("2 bytes")))
    }

    pub fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_be_bytes(self.take(4)?.try_into().expect("4 bytes")))
    }

    pub fn block16(&mut self) -> Result<&'a [u8]> {
        let len = self.u16()? as usize;
        self.take(len)
    }

    fn descriptor(&mut self) -> Result<BackendDescriptor> {
        let name = String::from_utf8(self.block16()?.to_vec())
            .map_err(|_| Error::Encoding("descriptor name is not UTF-8".into()))?;
        let group_order_be = self.block16()?.to_vec();
        let g1_encoded_len = self.u32()?;
        let g2_encoded_len = self.u32()?;
        Ok(BackendDescriptor {
            name,
            group_order_be,
            g1_encoded_len,
            g2_encoded_len,
        })
    }

    /// Parses and validates the common header, returning `n`.
    pub fn header<B: PairingBackend>(&mut self, kind: ObjectKind) -> Result<u32> {
        let prefix = self.take(4)?;
        if prefix != MAGIC_PREFIX {
            return Err(Error::Encoding("bad magic".into()));
        }
        let found_kind = self.byte()?;
        if ObjectKind::from_byte(found_kind) != Some(kind) {
            return Err(Error::Encoding(format!(
                "object kind 0x{found_kind:02x} where a {} was expected",
                kind.label()
            )));
        }
        let version = self.byte()?;
        if version != FORMAT_VERSION {
            return Err(Error::Encoding(format!("unsupported format version {version}")));
        }
        let reserved = self.take(2)?;
        if reserved != [0, 0] {
            return Err(Error::Encoding("nonzero reserved magic bytes".into()));
        }
        let descriptor = self.descriptor()?;
        check_descriptor::<B>(&descriptor)?;
        self.u32()
    }

    /// Fails unless every byte has been consumed.
    pub fn expect_end(&self) -> Result<()> {
        if self.pos != self.buf.len() {
            return Err(Error::Encoding(format!(
                "{} trailing bytes after object",
                self.buf.len() - self.pos
            )));
        }
        Ok(())
    }
}

/// Byte length of the common header under the given descriptor.
pub(crate) fn header_len(descriptor: &BackendDescriptor) -> usize {
    8 + 2 + descriptor.name.len() + 2 + descriptor.group_order_be.len() + 4 + 4 + 4
}

/// Reads the backend descriptor out of any serialized key or signature
/// without decoding the body. Lets callers pick the right backend before
/// committing to a full decode.
pub fn peek_descriptor(bytes: &[u8]) -> Result<BackendDescriptor> {
    let mut r = Reader::new(bytes);
    let prefix = r.take(4)?;
    if prefix != MAGIC_PREFIX {
        return Err(Error::Encoding("bad magic".into()));
    }
    let kind = r.byte()?;
    if ObjectKind::from_byte(kind).is_none() {
        return Err(Error::Encoding(format!("unknown object kind 0x{kind:02x}")));
    }
    let version = r.byte()?;
    if version != FORMAT_VERSION {
        return Err(Error::Encoding(format!("unsupported format version {version}")));
    }
    r.take(2)?;
    r.descriptor()
}
