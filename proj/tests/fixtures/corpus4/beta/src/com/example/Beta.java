package com.example;

import android.content.res.TypedArray;
import android.database.DatabaseUtils;
import android.graphics.Picture;
import android.os.Build;
import android.os.Build.VERSION_CODES;

public class Beta {
    void load(TypedArray a) {
        if (Build.VERSION.SDK_INT >= VERSION_CODES.P) {
            useDefaults();
        } else {
            show(a.getTextArray(0));
            show(a.getTextArray(2));
        }
    }

    int classify(String sql) {
        if (Build.VERSION.SDK_INT <= 27) {
            int t = DatabaseUtils.getSqlStatementType(sql);
            return t == 0 ? DatabaseUtils.getSqlStatementType(sql.trim()) : t;
        }
        return 0;
    }

    int height(Picture p) {
        if (21 <= Build.VERSION.SDK_INT) {
            return p.getHeight();
        }
        return 0;
    }

    private void useDefaults() {}

    private void show(CharSequence[] items) {}
}
