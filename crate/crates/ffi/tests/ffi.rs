use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use g5census_ffi::*;

const HYP_LINE: &str =
    "HYP g=5 q=1 p=dfe aut=2 N=5,9,11,33,25 L=2,4,6,12,16 NP=1/3,1/3,1/3,1/2,1/2,1/2,1/2,2/3,2/3,2/3";

fn last_error() -> String {
    let p = g5_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn hyperelliptic_census_through_handles() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(g5_census_run(G5Stratum::Hyperelliptic, 5, 1, &mut c), G5Status::Ok);
        assert_eq!(g5_census_len(c), 1070);
        let (mut num, mut den) = (0, 0);
        assert_eq!(g5_census_mass(c, &mut num, &mut den), G5Status::Ok);
        assert_eq!((num, den), (512, 1));

        let mut r = ptr::null_mut();
        assert_eq!(g5_census_get(c, 0, &mut r), G5Status::Ok);
        let mut st = G5Stratum::Trigonal;
        assert_eq!(g5_record_stratum(r, &mut st), G5Status::Ok);
        assert_eq!(st, G5Stratum::Hyperelliptic);
        assert_eq!(g5_record_verify(r), G5Status::Ok);
        g5_record_free(r);

        assert_eq!(g5_census_get(c, 5000, &mut r), G5Status::InvalidArgument);
        assert!(last_error().contains("out of range"));

        let dir = tempfile::tempdir().unwrap();
        let path = CString::new(dir.path().join("hyp.txt").to_str().unwrap()).unwrap();
        assert_eq!(g5_census_write(c, path.as_ptr()), G5Status::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(g5_census_load(path.as_ptr(), &mut back), G5Status::Ok);
        assert_eq!(g5_census_len(back), 1070);
        g5_census_free(back);
        g5_census_free(c);
    }
}

#[test]
fn record_accessors() {
    unsafe {
        let line = CString::new(HYP_LINE).unwrap();
        let mut r = ptr::null_mut();
        assert_eq!(g5_record_parse(line.as_ptr(), &mut r), G5Status::Ok);
        assert_eq!(g5_record_aut(r), 2);

        let mut counts = [0u64; 8];
        assert_eq!(g5_record_counts(r, counts.as_mut_ptr(), counts.len()), 5);
        assert_eq!(&counts[..5], &[5, 9, 11, 33, 25]);
        let mut l = [0i64; 11];
        assert_eq!(g5_record_lpoly(r, l.as_mut_ptr(), l.len()), 11);
        assert_eq!(&l[..6], &[1, 2, 4, 6, 12, 16]);
        assert_eq!(l[10], 32);

        let need = g5_record_line(r, ptr::null_mut(), 0);
        assert_eq!(need, HYP_LINE.len());
        let mut buf = vec![0 as std::ffi::c_char; need + 1];
        g5_record_line(r, buf.as_mut_ptr(), buf.len());
        assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), HYP_LINE);
        let mut short = [0 as std::ffi::c_char; 4];
        assert_eq!(g5_record_line(r, short.as_mut_ptr(), short.len()), need);
        assert_eq!(CStr::from_ptr(short.as_ptr()).to_str().unwrap(), "HYP");
        g5_record_free(r);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut r = ptr::null_mut();
        let bad = CString::new("HYP g=5 q=1").unwrap();
        assert_eq!(g5_record_parse(bad.as_ptr(), &mut r), G5Status::Parse);
        assert!(r.is_null());
        assert!(last_error().contains("missing"));

        assert_eq!(g5_record_parse(ptr::null(), &mut r), G5Status::NullPointer);
        assert_eq!(g5_census_mass(ptr::null(), ptr::null_mut(), ptr::null_mut()), G5Status::NullPointer);
        assert_eq!(g5_census_len(ptr::null()), 0);

        let stale = CString::new(HYP_LINE.replace("N=5,", "N=6,")).unwrap();
        assert_eq!(g5_record_parse(stale.as_ptr(), &mut r), G5Status::Ok);
        assert_eq!(g5_record_verify(r), G5Status::Invariant);
        g5_record_free(r);

        let mut c = ptr::null_mut();
        let missing = CString::new("/nonexistent/census.txt").unwrap();
        assert_eq!(g5_census_load(missing.as_ptr(), &mut c), G5Status::Io);
        assert_eq!(g5_census_run(G5Stratum::Hyperelliptic, 9, 1, &mut c), G5Status::InvalidArgument);
        g5_census_free(ptr::null_mut());
        g5_record_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/g5census.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["g5_census_run", "g5_record_parse", "g5_last_error", "G5_STATUS_INVARIANT"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("use.c");
    std::fs::write(
        &src,
        "#include \"g5census.h\"\nint main(void) { G5Census *c = 0; return (int)g5_census_len(c); }\n",
    )
    .unwrap();
    let out = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(header.parent().unwrap())
        .arg(&src)
        .output()
        .expect("a C compiler is installed");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
