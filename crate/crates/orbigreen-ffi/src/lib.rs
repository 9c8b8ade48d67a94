//! C ABI over orbigreen.
//!
//! Handles are opaque and owned by the caller once returned; release them
//! with the matching `*_free`. Every fallible function returns an `OG_*`
//! status code; on failure a message is available from [`og_last_error`]
//! until the next failing call on the same thread.
//!
//! Strings are returned by copying into a caller buffer: pass `buf = NULL,
//! len = 0` to learn the size (including the terminating NUL) via `needed`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use orbigreen::io::DiagramDocument;
use orbigreen::verify::{apply_sequence, verify_mgs, Mode, Outcome, VerificationReport};
use orbigreen::{
    build_diagram, delta, delta_amended, Error, FramedSeed, MutationSequence, OrbifoldParams, VertexColor, VertexLabel,
};

pub const OG_OK: i32 = 0;
/// A required pointer argument was NULL.
pub const OG_ERR_NULL: i32 = 1;
/// The (n,p,q) triple has no construction (e.g. a single puncture).
pub const OG_ERR_UNSUPPORTED: i32 = 2;
pub const OG_ERR_UNKNOWN_VERTEX: i32 = 3;
/// Malformed argument: bad UTF-8, index out of range, invalid document.
pub const OG_ERR_INVALID: i32 = 4;
/// The mutation engine hit a non-sign-coherent row or overflow.
pub const OG_ERR_ENGINE: i32 = 5;
/// The output buffer is too small; `needed` holds the required size.
pub const OG_ERR_BUFFER: i32 = 6;
pub const OG_ERR_PANIC: i32 = 7;

pub const OG_GREEN: i32 = 1;
pub const OG_RED: i32 = -1;

pub const OG_OUTCOME_VALID: i32 = 0;
pub const OG_OUTCOME_NOT_GREEN: i32 = 1;
pub const OG_OUTCOME_NOT_ALL_RED: i32 = 2;
pub const OG_OUTCOME_ENGINE_FAULT: i32 = 3;

/// A framed seed: exchange matrix plus c-vectors.
pub struct OgSeed {
    seed: FramedSeed,
}

/// A mutation sequence.
pub struct OgSequence {
    seq: MutationSequence,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

type Fail = (i32, String);

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OG_OK,
        Ok(Err((code, msg))) => {
            set_error(&msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            OG_ERR_PANIC
        }
    }
}

fn engine(e: Error) -> Fail {
    let code = match e {
        Error::UnknownVertex(_) => OG_ERR_UNKNOWN_VERTEX,
        Error::MixedSign(_) | Error::ZeroRow(_) | Error::Overflow(_) | Error::NonIntegerWeight(_) => OG_ERR_ENGINE,
        _ => OG_ERR_INVALID,
    };
    (code, e.to_string())
}

fn unsupported(e: orbigreen::Rejection) -> Fail {
    (OG_ERR_UNSUPPORTED, e.to_string())
}

fn null() -> Fail {
    (OG_ERR_NULL, "null pointer argument".to_string())
}

unsafe fn cstr<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|_| (OG_ERR_INVALID, "string is not UTF-8".to_string()))
}

unsafe fn label(p: *const c_char) -> Result<VertexLabel, Fail> {
    cstr(p)?.parse().map_err(|e: orbigreen::label::LabelParseError| (OG_ERR_INVALID, e.to_string()))
}

unsafe fn out<T>(p: *mut T, v: T) -> Result<(), Fail> {
    if p.is_null() {
        return Err(null());
    }
    p.write(v);
    Ok(())
}

unsafe fn reference<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(null)
}

unsafe fn reference_mut<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(null)
}

unsafe fn copy_str(s: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> Result<(), Fail> {
    let size = s.len() + 1;
    if !needed.is_null() {
        needed.write(size);
    }
    if buf.is_null() && len == 0 {
        return Ok(());
    }
    if buf.is_null() {
        return Err(null());
    }
    if len < size {
        return Err((OG_ERR_BUFFER, format!("buffer of {len} bytes, need {size}")));
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf as *mut u8, s.len());
    buf.add(s.len()).write(0);
    Ok(())
}

fn params(n: u32, p: u32, q: u32) -> OrbifoldParams {
    OrbifoldParams::new(n, p, q)
}

unsafe fn report_out(rep: &VerificationReport, outcome: *mut i32, step: *mut usize) -> Result<(), Fail> {
    let (code, at) = match &rep.outcome {
        Outcome::Valid => (OG_OUTCOME_VALID, 0),
        Outcome::NotGreenAt(i) => (OG_OUTCOME_NOT_GREEN, *i),
        Outcome::NotAllRedAtEnd => (OG_OUTCOME_NOT_ALL_RED, 0),
        Outcome::EngineFault { step, .. } => (OG_OUTCOME_ENGINE_FAULT, *step),
    };
    out(outcome, code)?;
    if !step.is_null() {
        step.write(at);
    }
    Ok(())
}

/// Message of the last failing call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn og_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Build and frame the diagram for genus `n`, `p` punctures, `q` orbifold points.
///
/// # Safety
/// `out` must be a valid pointer to write a handle to.
#[no_mangle]
pub unsafe extern "C" fn og_seed_build(n: u32, p: u32, q: u32, out_seed: *mut *mut OgSeed) -> i32 {
    guard(|| {
        let m = build_diagram(params(n, p, q)).map_err(unsupported)?;
        out(out_seed, Box::into_raw(Box::new(OgSeed { seed: FramedSeed::frame(m) })))
    })
}

/// Load a seed from a diagram document (JSON). Without frozen rows the
/// seed is framed with C = identity.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn og_seed_from_json(json: *const c_char, out_seed: *mut *mut OgSeed) -> i32 {
    guard(|| {
        let doc = DiagramDocument::from_json(cstr(json)?).map_err(engine)?;
        let seed = doc.to_seed().map_err(engine)?;
        out(out_seed, Box::into_raw(Box::new(OgSeed { seed })))
    })
}

/// Serialize the seed, including its C block, as a diagram document.
///
/// # Safety
/// `seed` must be a live handle; `buf` must hold `len` bytes or be NULL.
#[no_mangle]
pub unsafe extern "C" fn og_seed_to_json(seed: *const OgSeed, buf: *mut c_char, len: usize, needed: *mut usize) -> i32 {
    guard(|| {
        let s = reference(seed)?;
        copy_str(&DiagramDocument::from_seed(&s.seed, None).to_json(), buf, len, needed)
    })
}

/// # Safety
/// `seed` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn og_seed_clone(seed: *const OgSeed, out_seed: *mut *mut OgSeed) -> i32 {
    guard(|| {
        let s = reference(seed)?;
        out(out_seed, Box::into_raw(Box::new(OgSeed { seed: s.seed.clone() })))
    })
}

/// Release a seed. NULL is ignored.
///
/// # Safety
/// `seed` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn og_seed_free(seed: *mut OgSeed) {
    if !seed.is_null() {
        drop(Box::from_raw(seed));
    }
}

/// # Safety
/// `seed` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn og_seed_rank(seed: *const OgSeed, rank: *mut usize) -> i32 {
    guard(|| out(rank, reference(seed)?.seed.rank()))
}

/// Name of vertex `i`.
///
/// # Safety
/// `seed` must be a live handle; `buf` must hold `len` bytes or be NULL.
#[no_mangle]
pub unsafe extern "C" fn og_seed_label(
    seed: *const OgSeed,
    i: usize,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> i32 {
    guard(|| {
        let s = &reference(seed)?.seed;
        if i >= s.rank() {
            return Err(engine(Error::IndexOutOfRange(i)));
        }
        copy_str(&s.base().label(i).to_string(), buf, len, needed)
    })
}

/// Mutate at the named vertex (whatever its color).
///
/// # Safety
/// `seed` must be a live handle; `vertex` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn og_seed_mutate(seed: *mut OgSeed, vertex: *const c_char) -> i32 {
    guard(|| {
        let s = reference_mut(seed)?;
        let k = s.seed.index_of(&label(vertex)?).map_err(engine)?;
        s.seed.mutate_index(k).map_err(engine)
    })
}

/// # Safety
/// `seed` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn og_seed_mutate_index(seed: *mut OgSeed, k: usize) -> i32 {
    guard(|| {
        let s = reference_mut(seed)?;
        if k >= s.seed.rank() {
            return Err(engine(Error::IndexOutOfRange(k)));
        }
        s.seed.mutate_index(k).map_err(engine)
    })
}

/// Color of the named vertex: `OG_GREEN` or `OG_RED`.
///
/// # Safety
/// `seed` must be a live handle; `vertex` a NUL-terminated string; `color` valid.
#[no_mangle]
pub unsafe extern "C" fn og_seed_color(seed: *const OgSeed, vertex: *const c_char, color: *mut i32) -> i32 {
    guard(|| {
        let c = reference(seed)?.seed.color_of(&label(vertex)?).map_err(engine)?;
        out(color, if c == VertexColor::Green { OG_GREEN } else { OG_RED })
    })
}

/// Whether every vertex is red.
///
/// # Safety
/// `seed` must be a live handle; `is_final` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn og_seed_is_final(seed: *const OgSeed, is_final: *mut bool) -> i32 {
    guard(|| {
        let f = reference(seed)?.seed.is_final().map_err(engine)?;
        out(is_final, f)
    })
}

/// Copy c-row `i` (rank entries) into `row`.
///
/// # Safety
/// `seed` must be a live handle; `row` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn og_seed_c_row(seed: *const OgSeed, i: usize, row: *mut i64, len: usize) -> i32 {
    guard(|| {
        let s = &reference(seed)?.seed;
        if i >= s.rank() {
            return Err(engine(Error::IndexOutOfRange(i)));
        }
        if row.is_null() {
            return Err(null());
        }
        if len < s.rank() {
            return Err((OG_ERR_BUFFER, format!("row needs {} entries", s.rank())));
        }
        ptr::copy_nonoverlapping(s.c_row(i).as_ptr(), row, s.rank());
        Ok(())
    })
}

/// Replay `seq` in strict mode, leaving the seed at the last state reached.
/// `outcome` receives an `OG_OUTCOME_*` value and `step` (optional) the
/// 1-based failing step.
///
/// # Safety
/// `seed` and `seq` must be live handles; `outcome` valid; `step` valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn og_seed_apply(
    seed: *mut OgSeed,
    seq: *const OgSequence,
    outcome: *mut i32,
    step: *mut usize,
) -> i32 {
    guard(|| {
        let s = reference_mut(seed)?;
        let q = reference(seq)?;
        let (end, rep) = apply_sequence(&s.seed, &q.seq.steps, Mode::Strict).map_err(engine)?;
        s.seed = end;
        report_out(&rep, outcome, step)
    })
}

/// The explicit sequence Δ for (n,p,q); `amended` selects the amended
/// genus-0 two-puncture band list.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn og_delta(n: u32, p: u32, q: u32, amended: bool, out_seq: *mut *mut OgSequence) -> i32 {
    guard(|| {
        let pr = params(n, p, q);
        let seq = if amended { delta_amended(pr) } else { delta(pr) }.map_err(unsupported)?;
        out(out_seq, Box::into_raw(Box::new(OgSequence { seq })))
    })
}

/// Parse a comma-separated list of labels, e.g. "b,a,c,b".
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn og_sequence_parse(text: *const c_char, out_seq: *mut *mut OgSequence) -> i32 {
    guard(|| {
        let steps = cstr(text)?
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.parse::<VertexLabel>().map_err(|e| (OG_ERR_INVALID, e.to_string())))
            .collect::<Result<Vec<_>, Fail>>()?;
        out(out_seq, Box::into_raw(Box::new(OgSequence { seq: MutationSequence::plain(steps) })))
    })
}

/// # Safety
/// `seq` must be a live handle; `len` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn og_sequence_len(seq: *const OgSequence, len: *mut usize) -> i32 {
    guard(|| out(len, reference(seq)?.seq.len()))
}

/// Label of mutation `i` (0-based).
///
/// # Safety
/// `seq` must be a live handle; `buf` must hold `len` bytes or be NULL.
#[no_mangle]
pub unsafe extern "C" fn og_sequence_label(
    seq: *const OgSequence,
    i: usize,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> i32 {
    guard(|| {
        let q = &reference(seq)?.seq;
        let v = q.steps.get(i).ok_or_else(|| engine(Error::IndexOutOfRange(i)))?;
        copy_str(&v.to_string(), buf, len, needed)
    })
}

/// Release a sequence. NULL is ignored.
///
/// # Safety
/// `seq` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn og_sequence_free(seq: *mut OgSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// Build, frame and replay Δ for (n,p,q).
///
/// # Safety
/// `outcome` must be valid; `step` valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn og_verify_mgs(n: u32, p: u32, q: u32, outcome: *mut i32, step: *mut usize) -> i32 {
    guard(|| {
        let rep = verify_mgs(params(n, p, q)).map_err(unsupported)?;
        report_out(&rep, outcome, step)
    })
}

/// Summary line of a verification, as printed by the CLI.
///
/// # Safety
/// `buf` must hold `len` bytes or be NULL.
#[no_mangle]
pub unsafe extern "C" fn og_verify_summary(
    n: u32,
    p: u32,
    q: u32,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> i32 {
    guard(|| {
        let rep = verify_mgs(params(n, p, q)).map_err(unsupported)?;
        copy_str(&rep.summary(), buf, len, needed)
    })
}
