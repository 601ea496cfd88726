use padic_serre_web::ops;

#[test]
fn polygon_json() {
    let v: serde_json::Value = serde_json::from_str(&ops::polygon(r#"["-2","0","0","1"]"#, 2).unwrap()).unwrap();
    assert_eq!(v["segments"][0]["slope"], "1/3");
    assert_eq!(v["vertices"][1][0], 3);
    assert!(ops::polygon("[", 2).is_err());
    assert!(ops::polygon(r#"["1","1"]"#, 4).is_err());
}

#[test]
fn weights_json() {
    let out = ops::weights(r#"{"niveau":"1","exponents":[[1,0,1]],"flags":["tres","tres"]}"#, 3).unwrap();
    assert_eq!(out, r#"["(5,3,1)"]"#);
    assert!(ops::weights(r#"{"niveau":"9"}"#, 3).is_err());
}

#[test]
fn frobenius_json() {
    let v: serde_json::Value =
        serde_json::from_str(&ops::frobenius(5, 2, "5,1", "", Some(1), Some(5), "", "trivial").unwrap()).unwrap();
    assert_eq!(v["class"], "15bd");
    let sextic = r#"["-13","-11","5","0","0","-2","1"]"#;
    let v: serde_json::Value =
        serde_json::from_str(&ops::frobenius(5, 2, "", sextic, Some(1), Some(5), "", "eps17").unwrap()).unwrap();
    assert_eq!(v["cycle_type"], serde_json::json!([5, 1]));
    let v: serde_json::Value =
        serde_json::from_str(&ops::frobenius(3, 2, "5,1", "", None, None, "", "trivial").unwrap()).unwrap();
    assert_eq!(v["charpolys"].as_array().unwrap().len(), 2);
    assert!(ops::frobenius(5, 2, "4,1,1", "", None, None, "", "trivial").is_err());
}
