//! C ABI over `spflag`.
//!
//! Every fallible function returns a [`SpflagStatus`]; on failure a message
//! is available from [`spflag_last_error_message`] on the same thread.
//! Strings handed out by the library are freed with [`spflag_string_free`],
//! handles with [`spflag_ekr_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use spflag::atlas::{codimension, count_classes};
use spflag::classify::{
    singularity_class_at, singularity_locus_equations, ClassifyOptions, GeometrySource, Target,
};
use spflag::cli::parse_point;
use spflag::ekr::{build_ekr, validate_word, EkrSpec, Model, Shift};
use spflag::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpflagStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ChartMismatch = 3,
    BadRational = 4,
    BadSyntax = 5,
    RuleViolation = 6,
    ConstantNotAdmitted = 7,
    IndexOutOfRange = 8,
    BadModelName = 9,
    NotSpecialFlag = 10,
    DegeneratePivot = 11,
    GeneratorBlowup = 12,
    UnexpectedCovariantDimension = 13,
    Overflow = 14,
    Panic = 15,
}

impl From<&Error> for SpflagStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::ChartMismatch(_) => SpflagStatus::ChartMismatch,
            Error::BadRational(_) => SpflagStatus::BadRational,
            Error::BadSyntax(_) => SpflagStatus::BadSyntax,
            Error::RuleViolation(_) => SpflagStatus::RuleViolation,
            Error::ConstantNotAdmitted(_) => SpflagStatus::ConstantNotAdmitted,
            Error::IndexOutOfRange(_) => SpflagStatus::IndexOutOfRange,
            Error::BadModelName(_) => SpflagStatus::BadModelName,
            Error::NotSpecialFlag(_) => SpflagStatus::NotSpecialFlag,
            Error::DegeneratePivot(_) => SpflagStatus::DegeneratePivot,
            Error::GeneratorBlowup { .. } => SpflagStatus::GeneratorBlowup,
            Error::UnexpectedCovariantDimension(_) => SpflagStatus::UnexpectedCovariantDimension,
        }
    }
}

/// Opaque EKR label with shift constants.
pub struct SpflagEkr {
    spec: EkrSpec,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(SpflagStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(SpflagStatus::from(&e), e.to_string())
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard<F: FnOnce() -> Result<(), Fail>>(f: F) -> SpflagStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SpflagStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            SpflagStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(SpflagStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(SpflagStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn check_out<T>(out: *mut T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        Err(Fail(SpflagStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

fn options(generic: c_int) -> ClassifyOptions {
    ClassifyOptions {
        geometry: if generic != 0 {
            GeometrySource::Generic
        } else {
            GeometrySource::ClosedForm
        },
        ..ClassifyOptions::default()
    }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library on this thread.
#[no_mangle]
pub extern "C" fn spflag_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Creates a handle for a dot-separated word with all constants zero.
///
/// # Safety
/// `word` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spflag_ekr_new(
    word: *const c_char,
    out: *mut *mut SpflagEkr,
) -> SpflagStatus {
    guard(|| {
        check_out(out, "out")?;
        let w = validate_word(read_str(word, "word")?)?;
        *out = Box::into_raw(Box::new(SpflagEkr {
            spec: EkrSpec::new(w),
        }));
        Ok(())
    })
}

/// Creates a handle from the JSON constants format
/// `{"word": "1.2.1.3", "b": {"3": "1/2"}, "c": {"3": "-2"}}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spflag_ekr_from_json(
    json: *const c_char,
    out: *mut *mut SpflagEkr,
) -> SpflagStatus {
    guard(|| {
        check_out(out, "out")?;
        let spec = EkrSpec::from_json(read_str(json, "json")?)?;
        *out = Box::into_raw(Box::new(SpflagEkr { spec }));
        Ok(())
    })
}

/// Sets `b_step` (`which = 'b'`) or `c_step` (`which = 'c'`) to a rational
/// written like `-3/7`.
///
/// # Safety
/// `ekr` must come from this library; `value` must be a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn spflag_ekr_set_constant(
    ekr: *mut SpflagEkr,
    which: c_char,
    step: usize,
    value: *const c_char,
) -> SpflagStatus {
    guard(|| {
        check_out(ekr, "ekr")?;
        let shift = match which as u8 {
            b'b' => Shift::B,
            b'c' => Shift::C,
            other => {
                return Err(Fail(
                    SpflagStatus::BadSyntax,
                    format!("constant name {:?} is neither 'b' nor 'c'", other as char),
                ))
            }
        };
        let v = read_str(value, "value")?.parse()?;
        (*ekr).spec.set(shift, step, v)?;
        Ok(())
    })
}

/// Word length `r`, or 0 for a null handle.
///
/// # Safety
/// `ekr` must be null or come from this library.
#[no_mangle]
pub unsafe extern "C" fn spflag_ekr_length(ekr: *const SpflagEkr) -> usize {
    ekr.as_ref().map_or(0, |e| e.spec.length())
}

/// # Safety
/// `ekr` must be null or come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn spflag_ekr_free(ekr: *mut SpflagEkr) {
    if !ekr.is_null() {
        drop(Box::from_raw(ekr));
    }
}

/// Classifies the EKR at a comma-separated rational point (null for the
/// origin) and stores the JSON report in `report`.
///
/// # Safety
/// `ekr` must come from this library; `point` must be null or a
/// nul-terminated string; `report` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spflag_ekr_classify(
    ekr: *const SpflagEkr,
    point: *const c_char,
    generic_geometry: c_int,
    report: *mut *mut c_char,
) -> SpflagStatus {
    guard(|| {
        check_out(report, "report")?;
        let e = ekr
            .as_ref()
            .ok_or_else(|| Fail(SpflagStatus::NullPointer, "ekr is null".into()))?;
        let build = build_ekr(&e.spec);
        let p = if point.is_null() {
            build.chart().origin()
        } else {
            parse_point(read_str(point, "point")?)?
        };
        let rep = singularity_class_at(Target::Ekr(&build), &p, options(generic_geometry))?;
        *report = to_c_string(serde_json::to_string(&rep).expect("report serializes"));
        Ok(())
    })
}

/// Classifies a named model (`ca_2`, `ex_2`, `appxB_D(1,2,3)`, …).
///
/// # Safety
/// `name` must be a nul-terminated string; `point` null or nul-terminated;
/// `report` writable.
#[no_mangle]
pub unsafe extern "C" fn spflag_model_classify(
    name: *const c_char,
    point: *const c_char,
    generic_geometry: c_int,
    report: *mut *mut c_char,
) -> SpflagStatus {
    guard(|| {
        check_out(report, "report")?;
        let d = Model::parse(read_str(name, "name")?)?.distribution();
        let p = if point.is_null() {
            d.chart().origin()
        } else {
            parse_point(read_str(point, "point")?)?
        };
        let rep = singularity_class_at(Target::Distribution(&d), &p, options(generic_geometry))?;
        *report = to_c_string(serde_json::to_string(&rep).expect("report serializes"));
        Ok(())
    })
}

/// Number of singularity classes of width `width` and length `length`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spflag_count_classes(
    width: usize,
    length: usize,
    out: *mut u64,
) -> SpflagStatus {
    guard(|| {
        check_out(out, "out")?;
        if width == 0 || length == 0 {
            return Err(Fail(
                SpflagStatus::IndexOutOfRange,
                "width and length must be at least 1".into(),
            ));
        }
        let n = count_classes(width, length);
        *out = u64::try_from(n)
            .map_err(|_| Fail(SpflagStatus::Overflow, format!("count {n} exceeds 64 bits")))?;
        Ok(())
    })
}

/// Codimension of a singularity class.
///
/// # Safety
/// `word` must be a nul-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spflag_codimension(word: *const c_char, out: *mut usize) -> SpflagStatus {
    guard(|| {
        check_out(out, "out")?;
        *out = codimension(&validate_word(read_str(word, "word")?)?);
        Ok(())
    })
}

/// Locus equations of a class, one `var=0` per line.
///
/// # Safety
/// `word` must be a nul-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spflag_locus(word: *const c_char, out: *mut *mut c_char) -> SpflagStatus {
    guard(|| {
        check_out(out, "out")?;
        let w = validate_word(read_str(word, "word")?)?;
        let text: String = singularity_locus_equations(&w)
            .iter()
            .map(|e| format!("{e}\n"))
            .collect();
        *out = to_c_string(text);
        Ok(())
    })
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be null or come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn spflag_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
